#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace l1path {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on a value (negative threshold, radius, weight, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Query outside the parameter range covered by a path.
class RangeError : public Error {
public:
    using Error::Error;
};

/// The restricted normal equations are singular, so the minimizer (or the
/// direction of the path) is not unique.
class NonUniquePath : public Error {
public:
    NonUniquePath(std::string what, std::vector<Eigen::Index> indices)
        : Error(std::move(what)), indices_(std::move(indices)) {}

    const std::vector<Eigen::Index>& indices() const { return indices_; }

private:
    std::vector<Eigen::Index> indices_;
};

/// The solver reached a state that well-posed input cannot produce.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An iterate contains NaN or infinity.
class DivergenceError : public Error {
public:
    using Error::Error;
};

} // namespace l1path

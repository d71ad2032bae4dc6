#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "l1path/errors.hpp"
#include "l1path/scalar.hpp"

namespace l1path {

using Index = Eigen::Index;
using IndexSet = std::vector<Index>;

template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Weighted lasso instance: minimize ||Kx - y||^2 + 2 lambda sum_i w_i |x_i|.
template <class T>
struct Problem {
    Matrix<T> K;
    Vector<T> y;
    Vector<T> w;

    Problem(Matrix<T> K_, Vector<T> y_) : K(std::move(K_)), y(std::move(y_)) {
        w = Vector<T>::Constant(K.cols(), T(1));
        validate();
    }

    Problem(Matrix<T> K_, Vector<T> y_, Vector<T> w_) : K(std::move(K_)), y(std::move(y_)), w(std::move(w_)) {
        validate();
    }

    Index rows() const { return K.rows(); }
    Index cols() const { return K.cols(); }

    bool penalized(Index i) const { return w(i) != T(0); }

    IndexSet zero_weight_indices() const {
        IndexSet out;
        for (Index i = 0; i < cols(); ++i)
            if (!penalized(i)) out.push_back(i);
        return out;
    }

    void validate() const {
        if (K.rows() < 1 || K.cols() < 1) throw DimensionError("matrix must be at least 1x1");
        if (y.size() != K.rows())
            throw DimensionError("data length " + std::to_string(y.size()) + " does not match " +
                                 std::to_string(K.rows()) + " matrix rows");
        if (w.size() != K.cols())
            throw DimensionError("weights length " + std::to_string(w.size()) + " does not match " +
                                 std::to_string(K.cols()) + " matrix columns");
        for (Index i = 0; i < w.size(); ++i)
            if (w(i) < T(0)) throw DomainError("weight " + std::to_string(i) + " is negative");
    }
};

template <class T>
IndexSet support_of(const Vector<T>& x) {
    IndexSet out;
    for (Index i = 0; i < x.size(); ++i)
        if (x(i) != T(0)) out.push_back(i);
    return out;
}

/// Converts every entry of an exact object to double.
template <class Derived>
auto to_double_matrix(const Eigen::MatrixBase<Derived>& m) {
    using T = typename Derived::Scalar;
    return m.unaryExpr([](const T& v) { return to_double(v); }).eval();
}

} // namespace l1path

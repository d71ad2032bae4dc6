#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "l1path/homotopy.hpp"

namespace testing {

using l1path::Index;
using l1path::Matrix;
using l1path::Problem;
using l1path::Rational;
using l1path::Vector;

inline Rational q(const char* text) { return Rational::parse(text); }

template <class T = Rational>
Matrix<T> mat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<T> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = T(v);
        ++i;
    }
    return m;
}

template <class T = Rational>
Vector<T> vec(std::initializer_list<long> values) {
    Vector<T> v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long x : values) v(i++) = T(x);
    return v;
}

/// Rational vector from text entries such as "43/16".
inline Vector<Rational> qvec(std::initializer_list<const char*> values) {
    Vector<Rational> v(static_cast<Index>(values.size()));
    Index i = 0;
    for (const char* x : values) v(i++) = Rational::parse(x);
    return v;
}

inline std::string show(const Vector<Rational>& v) { return l1path::detail::format_vector(v); }

// The worked examples.
inline Problem<Rational> identity_example() {
    return Problem<Rational>(Matrix<Rational>::Identity(5, 5), vec({12, -8, 5, 1, 2}));
}

inline Problem<Rational> tie_example() {
    return Problem<Rational>(mat({{-3, 4, 4}, {-5, 1, 4}, {5, 1, -4}}), vec({24, 17, -7}));
}

inline Problem<Rational> removal_example() {
    return Problem<Rational>(mat({{-4, 3, -1}, {-4, 4, 3}, {-1, 1, -1}}), vec({7, 21, 0}));
}

/// The tie example's K and y with weights (2, 1, 0).
inline Problem<Rational> weighted_example() {
    return Problem<Rational>(mat({{-3, 4, 4}, {-5, 1, 4}, {5, 1, -4}}), vec({24, 17, -7}), vec({2, 1, 0}));
}

/// Data consistent with the printed weighted node table (Gram
/// [[5,-3,-1],[-3,6,10],[-1,10,26]], K^T y = (26,-23,-17)).
inline Problem<Rational> weighted_table_data() {
    return Problem<Rational>(mat({{-2, 1, -1}, {-1, 1, 3}, {0, -2, -4}}), vec({-11, -4, 4}), vec({2, 1, 0}));
}

struct Row {
    Vector<Rational> x;
    Rational lambda;
};

} // namespace testing

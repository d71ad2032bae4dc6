#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include "l1path/errors.hpp"
#include "l1path/rational.hpp"

namespace l1path {

using std::abs;

/// Tolerances used by the floating-point backend. Both are exactly zero on
/// the rational backend.
struct ToleranceSpec {
    /// relative tolerance for "two ratios are equal"
    double tie_rel = 1e-9;
    /// absolute tolerance for "a coefficient or step length is zero"
    double zero_abs = 1e-12;

    static constexpr ToleranceSpec exact() { return {0.0, 0.0}; }
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "float";
    static ToleranceSpec default_tolerance() { return {}; }
    static double to_double(double v) { return v; }
    static double from_double(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "rational";
    static ToleranceSpec default_tolerance() { return ToleranceSpec::exact(); }
    static double to_double(const Rational& v) { return v.to_double(); }
    static Rational from_double(double v) { return Rational::from_double(v); }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
ToleranceSpec default_tolerance() { return ScalarTraits<T>::default_tolerance(); }

template <class T>
double to_double(const T& v) { return ScalarTraits<T>::to_double(v); }

inline int sign(double v) { return (v > 0) - (v < 0); }
inline int sign(const Rational& v) { return v.sign(); }

/// Exact equality on the rational backend; |a-b| <= tie_rel * max(1,|a|,|b|)
/// on the float backend.
inline bool approx_equal(const Rational& a, const Rational& b, const ToleranceSpec&) { return a == b; }
inline bool approx_equal(double a, double b, const ToleranceSpec& tol) {
    using std::abs;
    return abs(a - b) <= tol.tie_rel * std::max({1.0, abs(a), abs(b)});
}

/// a <= b up to the tie tolerance.
inline bool approx_less_equal(const Rational& a, const Rational& b, const ToleranceSpec&) { return a <= b; }
inline bool approx_less_equal(double a, double b, const ToleranceSpec& tol) {
    return a <= b || approx_equal(a, b, tol);
}

inline bool is_zero(const Rational& v, const ToleranceSpec&) { return v.is_zero(); }
inline bool is_zero(double v, const ToleranceSpec& tol) { return std::abs(v) <= tol.zero_abs; }

/// Division that reports a zero divisor instead of producing infinity.
template <class T>
T checked_div(const T& num, const T& den) {
    if constexpr (is_exact_v<T>) {
        return num / den;
    } else {
        if (den == T(0)) throw DivisionByZero();
        return num / den;
    }
}

/// Text form: `p/q` or `p` for rationals, decimal or scientific notation for
/// floats. A float token is a parse error on the rational backend.
template <class T>
T parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

/// `p/q` for rationals; shortest round-trip decimal for floats.
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

} // namespace l1path

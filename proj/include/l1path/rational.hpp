#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmp.h>

#include <Eigen/Core>

namespace l1path {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator, so equality is mathematical equality.
class Rational {
public:
    Rational() { mpq_init(value_); }
    Rational(int v) : Rational(static_cast<long>(v)) {}
    Rational(long v) { mpq_init(value_); mpq_set_si(value_, v, 1); }
    Rational(long long v) : Rational(static_cast<long>(v)) {}
    Rational(long num, long den);

    Rational(const Rational& other) { mpq_init(value_); mpq_set(value_, other.value_); }
    Rational(Rational&& other) noexcept { mpq_init(value_); mpq_swap(value_, other.value_); }
    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(value_, other.value_);
        return *this;
    }
    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(value_, other.value_);
        return *this;
    }
    ~Rational() { mpq_clear(value_); }

    /// Parses `p/q` or `p`. Throws ParseError on anything else (including
    /// decimal notation) and DivisionByZero on a zero denominator.
    static Rational parse(std::string_view text);

    /// Exact value of a finite double.
    static Rational from_double(double v);

    /// Copies and canonicalizes a raw GMP value.
    static Rational from_mpq(mpq_srcptr q);

    std::string to_string() const;
    double to_double() const { return mpq_get_d(value_); }

    int sign() const { return mpq_sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    Rational& operator+=(const Rational& rhs) { mpq_add(value_, value_, rhs.value_); return *this; }
    Rational& operator-=(const Rational& rhs) { mpq_sub(value_, value_, rhs.value_); return *this; }
    Rational& operator*=(const Rational& rhs) { mpq_mul(value_, value_, rhs.value_); return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(Rational v) { mpq_neg(v.value_, v.value_); return v; }
    friend Rational operator+(Rational v) { return v; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_, b.value_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

    mpq_srcptr get_mpq() const { return value_; }

private:
    mpq_t value_;
};

inline Rational abs(Rational v) { return v.sign() < 0 ? -v : v; }

/// Square root when `v` is the square of a rational, nothing otherwise.
std::optional<Rational> exact_sqrt(const Rational& v);

/// Nearest rational to sqrt(v) carrying at least `bits` bits of precision.
Rational approximate_sqrt(const Rational& v, unsigned bits = 200);

} // namespace l1path

namespace Eigen {

template <>
struct NumTraits<l1path::Rational> : GenericNumTraits<l1path::Rational> {
    using Real = l1path::Rational;
    using NonInteger = l1path::Rational;
    using Nested = l1path::Rational;
    using Literal = l1path::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

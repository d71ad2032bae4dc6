#include "l1path/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "l1path/errors.hpp"

namespace l1path {

namespace {

class Integer {
public:
    Integer() { mpz_init(v); }
    ~Integer() { mpz_clear(v); }
    Integer(const Integer&) = delete;
    Integer& operator=(const Integer&) = delete;

    mpz_t v;
};

class Fraction {
public:
    Fraction() { mpq_init(v); }
    ~Fraction() { mpq_clear(v); }
    Fraction(const Fraction&) = delete;
    Fraction& operator=(const Fraction&) = delete;

    mpq_t v;
};

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

void set_integer(mpz_t out, std::string_view s) {
    std::string buf(s);
    if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
    if (mpz_set_str(out, buf.c_str(), 10) != 0)
        throw ParseError("invalid integer '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_init(value_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(value_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(value_);
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");

    Rational out;
    Integer n, d;
    set_integer(n.v, num);
    if (slash == std::string_view::npos) {
        mpz_set_ui(d.v, 1);
    } else {
        set_integer(d.v, den);
        if (mpz_sgn(d.v) == 0) throw DivisionByZero();
    }
    if (mpz_sgn(d.v) < 0) {
        mpz_neg(d.v, d.v);
        mpz_neg(n.v, n.v);
    }
    mpq_set_num(out.value_, n.v);
    mpq_set_den(out.value_, d.v);
    mpq_canonicalize(out.value_);
    return out;
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw DomainError("cannot convert non-finite value to rational");
    Rational out;
    mpq_set_d(out.value_, v);
    return out;
}

Rational Rational::from_mpq(mpq_srcptr q) {
    Rational out;
    mpq_set(out.value_, q);
    mpq_canonicalize(out.value_);
    return out;
}

std::string Rational::to_string() const {
    std::string out(mpz_sizeinbase(mpq_numref(value_), 10) + mpz_sizeinbase(mpq_denref(value_), 10) + 3, '\0');
    mpq_get_str(out.data(), 10, value_);
    out.resize(std::char_traits<char>::length(out.c_str()));
    return out;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(value_), 1) == 0; }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    mpq_div(value_, value_, rhs.value_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v.sign() < 0) return std::nullopt;
    mpq_srcptr q = v.get_mpq();
    if (!mpz_perfect_square_p(mpq_numref(q)) || !mpz_perfect_square_p(mpq_denref(q))) return std::nullopt;
    Fraction root;
    mpz_sqrt(mpq_numref(root.v), mpq_numref(q));
    mpz_sqrt(mpq_denref(root.v), mpq_denref(q));
    return Rational::from_mpq(root.v);
}

Rational approximate_sqrt(const Rational& v, unsigned bits) {
    if (v.sign() < 0) throw DomainError("square root of a negative value");
    if (auto exact = exact_sqrt(v)) return *exact;
    // round(sqrt(v * 4^bits)) / 2^bits
    mpq_srcptr q = v.get_mpq();
    Integer scaled;
    mpz_mul_2exp(scaled.v, mpq_numref(q), 2 * bits + 2);
    mpz_tdiv_q(scaled.v, scaled.v, mpq_denref(q));
    Fraction root;
    mpz_sqrt(mpq_numref(root.v), scaled.v);
    mpz_add_ui(mpq_numref(root.v), mpq_numref(root.v), 1);
    mpz_fdiv_q_2exp(mpq_numref(root.v), mpq_numref(root.v), 1);
    mpz_set_ui(mpq_denref(root.v), 1);
    mpz_mul_2exp(mpq_denref(root.v), mpq_denref(root.v), bits);
    return Rational::from_mpq(root.v);
}

} // namespace l1path

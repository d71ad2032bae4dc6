#include "l1path/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace l1path {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

template <>
Rational parse_scalar<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
double parse_scalar<double>(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    // Integers and p/q are valid input on the float backend too.
    if (s.find('/') != std::string_view::npos) return Rational::parse(s).to_double();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("not a number: '" + std::string(text) + "'");
    return v;
}

std::string format_scalar(const Rational& v) { return v.to_string(); }

std::string format_scalar(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

} // namespace l1path

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plethyon {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we require: denominator > 0 and gcd(|num|, den) = 1
// after every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(const Int& b, std::uint32_t e) {
    Int r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

// "p/q", with "/q" omitted when q = 1.
inline std::string to_text(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace plethyon

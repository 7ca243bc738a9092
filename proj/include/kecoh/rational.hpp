#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kecoh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exponentiation by squaring; n >= 0.
Rational rational_pow(const Rational& base, unsigned n);

// Accepts "3", "-3", "7/2", "-7/2". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& s);

// "p/q" with q > 0, or just "p" when q == 1.
std::string rational_to_string(const Rational& q);

}  // namespace kecoh

#include "kecoh/rational.hpp"

#include <stdexcept>

namespace kecoh {

Rational rational_pow(const Rational& base, unsigned n) {
  Rational acc(1);
  Rational b = base;
  while (n > 0) {
    if (n & 1u) acc *= b;
    b *= b;
    n >>= 1u;
  }
  return acc;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace kecoh

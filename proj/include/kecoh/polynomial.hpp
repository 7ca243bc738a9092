#pragma once

#include "kecoh/rational.hpp"

#include <vector>

namespace kecoh {

// Dense univariate polynomial with exact rational coefficients.
// coefficient(k) multiplies x^k. All arithmetic is exact.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;  // the zero polynomial
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(int degree, const Rational& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    a += b;
    return a;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    a -= b;
    return a;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
    a *= b;
    return a;
  }

  RationalPolynomial pow(unsigned n) const;
  RationalPolynomial derivative() const;
  RationalPolynomial antiderivative() const;  // constant term zero

  // Exact definite integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  bool operator==(const RationalPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace kecoh

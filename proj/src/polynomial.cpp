#include "kecoh/polynomial.hpp"

#include <stdexcept>

namespace kecoh {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::pow(unsigned n) const {
  RationalPolynomial acc = constant(Rational(1));
  RationalPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RationalPolynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  if (is_zero()) return RationalPolynomial();
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::integrate(const Rational& lo, const Rational& hi) const {
  const RationalPolynomial F = antiderivative();
  return F(hi) - F(lo);
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace kecoh

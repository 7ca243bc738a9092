#include "kecoh/sign_integral.hpp"

#include <stdexcept>

namespace kecoh {

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

RationalPolynomial build_g(const OdeParams& p) {
  const Rational two_alpha = 2 * p.alpha;
  if (boost::multiprecision::denominator(two_alpha) != 1)
    throw std::invalid_argument("2*alpha is not an integer; params are corrupted");
  const int exp_u = p.n_f;  // 2*alpha + 1

  // 2 (1 + 2a' - c_hat u) u^{N_F}
  RationalPolynomial poly =
      RationalPolynomial({2 * (1 + 2 * p.alpha_prime), -2 * p.c_hat}) *
      RationalPolynomial::monomial(exp_u, Rational(1));
  for (const auto& [ab, mult] : p.a_bars) {
    const RationalPolynomial factor({ab * ab, Rational(0), Rational(-1)});
    poly *= factor.pow(static_cast<unsigned>(mult));
  }
  return poly;
}

SignIntegralResult sign_integral(const OdeParams& p) {
  const RationalPolynomial poly = build_g(p);
  const Rational hi = 2 * (p.alpha_prime + 1) / p.c_hat;  // sqrt(v_ceiling)
  SignIntegralResult r;
  r.value = poly.integrate(Rational(0), hi);
  r.sign = r.value < 0 ? Sign::Negative : (r.value > 0 ? Sign::Positive : Sign::Zero);
  r.integrand_degree = poly.degree();
  return r;
}

Rational g_zero_crossing(const OdeParams& p) {
  const Rational root = (1 + 2 * p.alpha_prime) / p.c_hat;
  return root * root;
}

}  // namespace kecoh

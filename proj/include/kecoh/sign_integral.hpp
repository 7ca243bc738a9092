#pragma once

#include "kecoh/ode_params.hpp"
#include "kecoh/polynomial.hpp"

namespace kecoh {

enum class Sign { Negative, Zero, Positive };

const char* sign_name(Sign s);

struct SignIntegralResult {
  Rational value;        // exact value of the deciding integral
  Sign sign;
  int integrand_degree;  // degree of the substituted polynomial
};

// The existence test integrates
//
//   g(x) = (1 + 2a' - c_hat sqrt(x)) x^alpha prod_l (a_bar_l^2 - x)^{m_l}
//
// over [0, v_ceiling]. Substituting x = u^2 clears every half-integer power
// (2 alpha + 1 = N_F is an integer), leaving the genuine polynomial
//
//   p(u) = g(u^2) 2u = 2 (1 + 2a' - c_hat u) u^{N_F} prod_l (a_bar_l^2 - u^2)^{m_l},
//
// which build_g returns. sign_integral integrates p exactly over
// [0, sqrt(v_ceiling)]; sqrt(v_ceiling) = 2(a'+1)/c_hat is rational for every
// rational c_hat, so no rounding enters anywhere.
RationalPolynomial build_g(const OdeParams& p);

SignIntegralResult sign_integral(const OdeParams& p);

// g is nonnegative exactly up to this point: ((1 + 2a')/c_hat)^2.
Rational g_zero_crossing(const OdeParams& p);

}  // namespace kecoh

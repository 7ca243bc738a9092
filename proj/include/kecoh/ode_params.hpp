#pragma once

#include "kecoh/catalog.hpp"
#include "kecoh/pairing.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kecoh {

// Normalized coefficients of the reduced Einstein equation for one case.
//
//   alpha        = (N_F - 1)/2
//   alpha_prime  = (N_F/eps_F - 1)/2        (>= -1/4)
//   c_hat        = free scale; default 2(1 + alpha'), which makes v_ceiling = 1
//   v_ceiling    = 4((alpha' + 1)/c_hat)^2
//   a_bars       = |kappa| * |theta_D|^2 / (c_hat * eps_F) over the positive
//                  half of the +-pairs, with multiplicities, ascending
//   einstein_constant = c_hat * eps_F / |theta_D|^2
//
// The coefficient condition "every a_bar^2 > v_ceiling" is equivalent to the
// pairing-side magnitude bound, independently of the choice of c_hat.
struct OdeParams {
  Rational alpha;
  Rational alpha_prime;
  Rational c_hat;
  Rational v_ceiling;
  std::vector<std::pair<Rational, int>> a_bars;
  int n_f = 0;
  int epsilon_f = 1;
  Rational einstein_constant;
  bool condition_d = false;

  // Echo of the source case for reports and serialization.
  int case_id = 0;
  std::vector<int> rank_params;
  Fiber fiber = Fiber::Quadric;

  std::string label() const;
};

// Default normalization c_hat = 2(1 + alpha'). Throws std::invalid_argument
// for c_hat <= 0.
OdeParams make_params(const CaseSpec& c, std::optional<Rational> c_hat = std::nullopt);

}  // namespace kecoh

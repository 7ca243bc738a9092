#include "kecoh/ode_params.hpp"

#include <map>
#include <stdexcept>

namespace kecoh {

OdeParams make_params(const CaseSpec& c, std::optional<Rational> c_hat_opt) {
  const PairingReport rep = kappa_ratios(c);

  OdeParams p;
  p.case_id = c.case_id;
  p.rank_params = c.rank_params;
  p.fiber = c.fiber;
  p.n_f = c.n_f;
  p.epsilon_f = c.epsilon_f;
  p.alpha = Rational(c.n_f - 1, 2);
  p.alpha_prime = (Rational(c.n_f, c.epsilon_f) - 1) / 2;
  p.c_hat = c_hat_opt ? *c_hat_opt : Rational(2) * (1 + p.alpha_prime);
  if (!(p.c_hat > 0)) throw std::invalid_argument("c_hat must be positive");
  const Rational ratio = (p.alpha_prime + 1) / p.c_hat;
  p.v_ceiling = 4 * ratio * ratio;
  p.einstein_constant = p.c_hat * c.epsilon_f / rep.theta_d_norm_sq;

  std::map<Rational, int> pos;
  for (const auto& [k, mult] : rep.kappa_values) {
    if (k > 0) pos[k * rep.theta_d_norm_sq / (p.c_hat * c.epsilon_f)] += mult;
  }
  p.a_bars.assign(pos.begin(), pos.end());

  p.condition_d = true;
  for (const auto& [ab, mult] : p.a_bars) {
    (void)mult;
    if (!(ab * ab > p.v_ceiling)) p.condition_d = false;
  }
  if (p.condition_d != rep.condition_d)
    throw std::logic_error("coefficient condition disagrees between its two forms");
  return p;
}

std::string OdeParams::label() const {
  std::string s = "case" + std::to_string(case_id);
  if (case_id == 1 || case_id == 3) s += " l=" + std::to_string(rank_params[0]);
  if (case_id == 2)
    s += " p=" + std::to_string(rank_params[0]) + " q=" + std::to_string(rank_params[1]);
  s += " ";
  s += fiber_short_name(fiber);
  return s;
}

}  // namespace kecoh

#include "kecoh/pairing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kecoh {

Rational RootVector::coordinate_sum() const {
  Rational s(0);
  for (const auto& c : coords) s += c;
  return s;
}

Rational pairing(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: coordinate length mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

namespace {

bool magnitude_bound_holds(const std::vector<std::pair<Rational, int>>& kappas,
                           const Rational& norm_sq, int n_f, int eps_f) {
  const Rational bound(n_f + eps_f);
  for (const auto& [k, mult] : kappas) {
    (void)mult;
    Rational mag = k < 0 ? Rational(-k) : k;
    if (!(norm_sq * mag > bound)) return false;
  }
  return true;
}

}  // namespace

PairingReport kappa_ratios(const CaseSpec& c) {
  PairingReport rep;
  if (c.positive_roots.empty()) {
    if (c.tabulated_kappa.empty())
      throw std::invalid_argument("case carries neither roots nor tabulated ratios");
    rep.kappa_values = c.tabulated_kappa;
    rep.theta_d_norm_sq = c.tabulated_theta_d_norm_sq;
  } else {
    if (pairing(c.theta_kappa, c.theta_d) != 0)
      throw std::domain_error("theta_kappa is not orthogonal to theta_D");
    std::map<Rational, int> acc;
    for (const auto& [root, mult] : c.positive_roots) {
      const Rational den = pairing(c.theta_d, root);
      if (den == 0) throw std::domain_error("root pairs to zero against theta_D");
      const Rational ratio = pairing(c.theta_kappa, root) / den;
      acc[ratio] += mult;
    }
    rep.kappa_values.assign(acc.begin(), acc.end());
    rep.theta_d_norm_sq = pairing(c.theta_d, c.theta_d);
  }
  // The ratios must occur in +-pairs of equal multiplicity.
  for (const auto& [k, mult] : rep.kappa_values) {
    const Rational neg = -k;
    auto it = std::find_if(rep.kappa_values.begin(), rep.kappa_values.end(),
                           [&](const auto& kv) { return kv.first == neg; });
    if (it == rep.kappa_values.end() || it->second != mult)
      throw std::domain_error("pairing ratios do not form +-pairs");
  }
  rep.condition_d = magnitude_bound_holds(rep.kappa_values, rep.theta_d_norm_sq, c.n_f, c.epsilon_f);
  return rep;
}

bool condition_d_holds(const CaseSpec& c) {
  return kappa_ratios(c).condition_d;
}

}  // namespace kecoh

#pragma once

#include "kecoh/catalog.hpp"

#include <utility>
#include <vector>

namespace kecoh {

// Pairing ratios <theta_kappa, beta> / <theta_D, beta> over the positive
// roots of a case, collected as a signed multiset.
struct PairingReport {
  // Sorted ascending by value; (value, multiplicity). Values occur in
  // +-pairs of equal multiplicity.
  std::vector<std::pair<Rational, int>> kappa_values;
  Rational theta_d_norm_sq;
  bool condition_d = false;
};

// Ratio multiset for the case, |theta_D|^2, and the coefficient-magnitude
// condition |theta_D|^2 * |kappa| > N_F + eps_F for every ratio.
// For case 5 the tabulated values are returned. Throws std::domain_error if
// some root pairs to zero against theta_D (malformed data), and
// std::invalid_argument on a malformed CaseSpec.
PairingReport kappa_ratios(const CaseSpec& c);

bool condition_d_holds(const CaseSpec& c);

}  // namespace kecoh

#pragma once

#include "kecoh/root_vector.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kecoh {

enum class Fiber { Quadric, ProjectiveSpace };

// "Q" / "CP"
const char* fiber_short_name(Fiber f);

// One member of the five admissible bundle families, together with the Lie
// data the downstream computations consume.
//
// Cases 1-4 carry explicit coordinates for theta_D, theta_kappa and the
// relevant positive roots; their pairing ratios are computed. Case 5 has no
// convenient orthonormal coordinate presentation, so only the pairing
// outputs (ratio +-24 with multiplicity 8 per sign, |theta_D|^2 = 1) are
// tabulated, cross-checked elsewhere against the known integrand factors.
struct CaseSpec {
  int case_id = 0;                       // 1..5
  std::vector<int> rank_params;          // {l} cases 1,3; {p,q} case 2; {} cases 4,5
  Fiber fiber = Fiber::Quadric;
  int epsilon_f = 1;                     // 2 iff fiber == ProjectiveSpace
  int n_f = 0;                           // real fiber-orbit half-dimension

  RootVector theta_d;                    // dual of the transversal generator
  RootVector theta_kappa;                // dual of the base Ricci element
  std::vector<std::pair<RootVector, int>> positive_roots;  // (root, multiplicity)

  // Tabulated pairing data, used when positive_roots is empty (case 5).
  std::vector<std::pair<Rational, int>> tabulated_kappa;
  Rational tabulated_theta_d_norm_sq;

  std::string group_name() const;        // e.g. "su(4)", "so(10)", "e6"
  std::string label() const;             // e.g. "case1 l=3 CP"
};

enum class AdmissibilityStatus { ProvenKE, ExcludedConditionD, ExcludedPositiveIntegral };

struct Admissibility {
  AdmissibilityStatus status;
  std::string detail;
};

const char* admissibility_name(AdmissibilityStatus s);

// Builds the catalog entry for one (case, ranks, fiber) choice.
// Validates the rank domain: case 1 needs l >= 2, case 2 needs p,q >= 1 and
// p+q > 2 (projective fiber only), case 3 needs l >= 4 (projective fiber
// only), cases 4 and 5 take no rank parameters.
CaseSpec make_case(int case_id, const std::vector<int>& rank_params, Fiber fiber);

// Every allowed (case_id, rank_params, fiber) combination with rank
// parameters up to max_rank. Case 2 pairs are canonicalized to p >= q.
// Requires max_rank >= 4.
std::vector<CaseSpec> enumerate_cases(int max_rank);

Admissibility classify(const CaseSpec& c);

}  // namespace kecoh

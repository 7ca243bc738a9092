#include "kecoh/catalog.hpp"

#include <stdexcept>

namespace kecoh {

namespace {

// su(n)-type vector: zeros of length dim with entries at given indices.
RootVector basis_diff(size_t dim, size_t i, size_t j) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return RootVector(std::move(v));
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

const char* fiber_short_name(Fiber f) {
  return f == Fiber::Quadric ? "Q" : "CP";
}

const char* admissibility_name(AdmissibilityStatus s) {
  switch (s) {
    case AdmissibilityStatus::ProvenKE: return "ProvenKE";
    case AdmissibilityStatus::ExcludedConditionD: return "ExcludedConditionD";
    case AdmissibilityStatus::ExcludedPositiveIntegral: return "ExcludedPositiveIntegral";
  }
  return "?";
}

CaseSpec make_case(int case_id, const std::vector<int>& rank_params, Fiber fiber) {
  CaseSpec c;
  c.case_id = case_id;
  c.rank_params = rank_params;
  c.fiber = fiber;
  c.epsilon_f = (fiber == Fiber::ProjectiveSpace) ? 2 : 1;

  switch (case_id) {
    case 1: {
      require(rank_params.size() == 1, "case 1 takes one rank parameter l");
      const int l = rank_params[0];
      require(l >= 2, "case 1 needs l >= 2");
      const size_t dim = static_cast<size_t>(l) + 1;
      c.n_f = 1;
      // theta_D = -1/2 (e1 - e2)
      std::vector<Rational> td(dim, Rational(0));
      td[0] = Rational(-1, 2);
      td[1] = Rational(1, 2);
      c.theta_d = RootVector(std::move(td));
      // theta_kappa = (l-1)(e1 + e2) - 2 sum_{a>=3} e_a
      std::vector<Rational> tk(dim, Rational(-2));
      tk[0] = tk[1] = Rational(l - 1);
      c.theta_kappa = RootVector(std::move(tk));
      // R'_+ = { e1 - e_a, e2 - e_a : 3 <= a <= l+1 }
      for (size_t a = 2; a < dim; ++a) {
        c.positive_roots.emplace_back(basis_diff(dim, 0, a), 1);
        c.positive_roots.emplace_back(basis_diff(dim, 1, a), 1);
      }
      break;
    }
    case 2: {
      require(rank_params.size() == 2, "case 2 takes rank parameters p, q");
      const int p = rank_params[0], q = rank_params[1];
      require(p >= 1 && q >= 1 && p + q > 2, "case 2 needs p,q >= 1 and p+q > 2");
      require(fiber == Fiber::ProjectiveSpace, "case 2 admits only the projective fiber");
      const size_t dp = static_cast<size_t>(p) + 1, dq = static_cast<size_t>(q) + 1;
      const size_t dim = dp + dq;
      c.n_f = 2;
      std::vector<Rational> td(dim, Rational(0));
      td[0] = Rational(-1, 2);
      td[1] = Rational(1, 2);
      td[dp] = Rational(-1, 2);
      td[dp + 1] = Rational(1, 2);
      c.theta_d = RootVector(std::move(td));
      std::vector<Rational> tk(dim, Rational(-2));
      tk[0] = tk[1] = Rational(p - 1);
      tk[dp] = tk[dp + 1] = Rational(q - 1);
      c.theta_kappa = RootVector(std::move(tk));
      for (size_t a = 2; a < dp; ++a) {
        c.positive_roots.emplace_back(basis_diff(dim, 0, a), 1);
        c.positive_roots.emplace_back(basis_diff(dim, 1, a), 1);
      }
      for (size_t b = 2; b < dq; ++b) {
        c.positive_roots.emplace_back(basis_diff(dim, dp, dp + b), 1);
        c.positive_roots.emplace_back(basis_diff(dim, dp + 1, dp + b), 1);
      }
      break;
    }
    case 3: {
      require(rank_params.size() == 1, "case 3 takes one rank parameter l");
      const int l = rank_params[0];
      require(l >= 4, "case 3 needs l >= 4");
      require(fiber == Fiber::ProjectiveSpace, "case 3 admits only the projective fiber");
      const size_t dim = static_cast<size_t>(l) + 1;
      c.n_f = 4;
      // theta_D = -1/2 (e1 + e2 - e3 - e4)
      std::vector<Rational> td(dim, Rational(0));
      td[0] = td[1] = Rational(-1, 2);
      td[2] = td[3] = Rational(1, 2);
      c.theta_d = RootVector(std::move(td));
      std::vector<Rational> tk(dim, Rational(-4));
      for (size_t i = 0; i < 4; ++i) tk[i] = Rational(l - 1);
      c.theta_kappa = RootVector(std::move(tk));
      for (size_t i = 0; i < 4; ++i)
        for (size_t a = 4; a < dim; ++a) c.positive_roots.emplace_back(basis_diff(dim, i, a), 1);
      break;
    }
    case 4: {
      require(rank_params.empty(), "case 4 takes no rank parameters");
      c.n_f = 6;
      // so(10) coordinates, 5 entries.
      std::vector<Rational> td(5, Rational(1, 2));
      td[0] = 0;
      c.theta_d = RootVector(std::move(td));
      std::vector<Rational> tk(5, Rational(0));
      tk[0] = 8;
      c.theta_kappa = RootVector(std::move(tk));
      // R'_+ = { e1 +- e_i : 2 <= i <= 5 }
      for (size_t i = 1; i < 5; ++i) {
        std::vector<Rational> plus(5, Rational(0)), minus(5, Rational(0));
        plus[0] = 1;
        plus[i] = 1;
        minus[0] = 1;
        minus[i] = -1;
        c.positive_roots.emplace_back(RootVector(std::move(plus)), 1);
        c.positive_roots.emplace_back(RootVector(std::move(minus)), 1);
      }
      break;
    }
    case 5: {
      require(rank_params.empty(), "case 5 takes no rank parameters");
      c.n_f = 8;
      c.tabulated_kappa = {{Rational(-24), 8}, {Rational(24), 8}};
      c.tabulated_theta_d_norm_sq = 1;
      break;
    }
    default:
      throw std::invalid_argument("case_id must be 1..5");
  }
  return c;
}

std::vector<CaseSpec> enumerate_cases(int max_rank) {
  require(max_rank >= 4, "enumerate_cases needs max_rank >= 4");
  std::vector<CaseSpec> out;
  for (int l = 2; l <= max_rank; ++l) {
    out.push_back(make_case(1, {l}, Fiber::Quadric));
    out.push_back(make_case(1, {l}, Fiber::ProjectiveSpace));
  }
  // Swapping the two factors gives the same bundle, so pairs are canonical p >= q.
  for (int p = 1; p <= max_rank; ++p)
    for (int q = 1; q <= p; ++q)
      if (p + q > 2) out.push_back(make_case(2, {p, q}, Fiber::ProjectiveSpace));
  for (int l = 4; l <= max_rank; ++l) out.push_back(make_case(3, {l}, Fiber::ProjectiveSpace));
  out.push_back(make_case(4, {}, Fiber::Quadric));
  out.push_back(make_case(4, {}, Fiber::ProjectiveSpace));
  out.push_back(make_case(5, {}, Fiber::Quadric));
  out.push_back(make_case(5, {}, Fiber::ProjectiveSpace));
  return out;
}

Admissibility classify(const CaseSpec& c) {
  switch (c.case_id) {
    case 1:
      if (c.rank_params[0] == 2 && c.fiber == Fiber::ProjectiveSpace)
        return {AdmissibilityStatus::ExcludedConditionD,
                "coefficient bound fails for su(3) with projective fiber"};
      return {AdmissibilityStatus::ProvenKE, ""};
    case 2: {
      const int mn = std::min(c.rank_params[0], c.rank_params[1]);
      if (mn == 1)
        return {AdmissibilityStatus::ExcludedConditionD,
                "coefficient bound fails when one factor is su(2)"};
      return {AdmissibilityStatus::ProvenKE, ""};
    }
    case 3:
      return {AdmissibilityStatus::ProvenKE, ""};
    case 4:
    case 5:
      if (c.fiber == Fiber::Quadric)
        return {AdmissibilityStatus::ExcludedPositiveIntegral,
                "sign integral is positive for the quadric fiber"};
      return {AdmissibilityStatus::ProvenKE, ""};
    default:
      throw std::invalid_argument("case_id must be 1..5");
  }
}

std::string CaseSpec::group_name() const {
  switch (case_id) {
    case 1: return "su(" + std::to_string(rank_params[0] + 1) + ")";
    case 2:
      return "su(" + std::to_string(rank_params[0] + 1) + ")+su(" +
             std::to_string(rank_params[1] + 1) + ")";
    case 3: return "su(" + std::to_string(rank_params[0] + 1) + ")";
    case 4: return "so(10)";
    case 5: return "e6";
  }
  return "?";
}

std::string CaseSpec::label() const {
  std::string s = "case" + std::to_string(case_id);
  if (case_id == 1 || case_id == 3) s += " l=" + std::to_string(rank_params[0]);
  if (case_id == 2)
    s += " p=" + std::to_string(rank_params[0]) + " q=" + std::to_string(rank_params[1]);
  s += " ";
  s += fiber_short_name(fiber);
  return s;
}

}  // namespace kecoh

#include "kecoh/ode_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace kecoh {

namespace {

// Plain-double view of the exact parameters, built once per solve.
struct OdeReal {
  double alpha, alpha_prime, c_hat, v_ceiling;
  double n_f, epsilon_f;
  std::vector<std::pair<double, int>> a_bars;
  double min_absq;  // smallest a_bar^2

  explicit OdeReal(const OdeParams& p)
      : alpha(to_double(p.alpha)),
        alpha_prime(to_double(p.alpha_prime)),
        c_hat(to_double(p.c_hat)),
        v_ceiling(to_double(p.v_ceiling)),
        n_f(p.n_f),
        epsilon_f(p.epsilon_f) {
    min_absq = std::numeric_limits<double>::infinity();
    for (const auto& [ab, mult] : p.a_bars) {
      const double a = to_double(ab);
      a_bars.emplace_back(a, mult);
      min_absq = std::min(min_absq, a * a);
    }
  }
};

void check_domain(const OdeReal& P, double theta, double v) {
  if (!(theta > 0.0) || !(theta < 1.0)) throw std::domain_error("theta outside (0,1)");
  if (!(v > 0.0) || !(v < P.min_absq)) throw std::domain_error("V outside (0, min a_bar^2)");
}

double rhs_theta_impl(const OdeReal& P, double theta, double v, double v_dot) {
  check_domain(P, theta, v);
  const double sv = std::sqrt(v);
  double pair_sum = 0.0;  // both signs of every +-pair
  for (const auto& [ab, mult] : P.a_bars) pair_sum += mult * (1.0 / (sv + ab) + 1.0 / (sv - ab));
  const double curvature = (v_dot * v_dot / (2.0 * sv)) * ((P.n_f - 1.0) / sv + pair_sum);
  const double drift =
      v_dot * ((P.c_hat * std::sqrt(v / theta) - P.n_f / P.epsilon_f - 1.0) / (1.0 - theta) -
               (P.n_f - 1.0) / (2.0 * theta));
  return -(curvature + drift);
}

// s = -log(1 - theta); state is (V, W) with W = dV/ds.
double rhs_s_impl(const OdeReal& P, double s, double v, double w) {
  const double one_minus_theta = std::exp(-s);
  const double theta = 1.0 - one_minus_theta;
  check_domain(P, theta, v);
  double S = 0.0;
  for (const auto& [ab, mult] : P.a_bars) S += mult / (ab * ab - v);
  return w * w * (S - P.alpha / v) +
         w * (1.0 + 2.0 * P.alpha_prime - P.c_hat * std::sqrt(v / theta) +
              P.alpha * one_minus_theta / theta);
}

double series_v2_impl(const OdeReal& P, double v1) {
  double s2 = 0.0;
  for (const auto& [ab, mult] : P.a_bars) s2 += mult / (ab * ab);
  return (v1 * v1 * s2 + v1 * (2.0 * (1.0 + P.alpha_prime) - P.c_hat * std::sqrt(v1))) /
         (2.0 + P.alpha);
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with embedded error control and a ceiling event.
// ---------------------------------------------------------------------------

using State = std::array<double, 2>;

struct StepperStats {
  long evals = 0;
  double max_err = 0.0;  // largest accepted error estimate on the V component
};

constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

// One trial step; returns the FSAL stage k7 and the embedded error estimate.
template <class F>
void dopri_stages(F&& f, double t, const State& y, double h, const State& k1, State& ynew,
                  State& k7, State& err, StepperStats& stats) {
  State k2, k3, k4, k5, k6;
  State tmp;
  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * A21 * k1[i];
  k2 = f(t + C2 * h, tmp);
  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
  k3 = f(t + C3 * h, tmp);
  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
  k4 = f(t + C4 * h, tmp);
  for (int i = 0; i < 2; ++i)
    tmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
  k5 = f(t + C5 * h, tmp);
  for (int i = 0; i < 2; ++i)
    tmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
  k6 = f(t + h, tmp);
  for (int i = 0; i < 2; ++i)
    ynew[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
  k7 = f(t + h, ynew);
  for (int i = 0; i < 2; ++i)
    err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
  stats.evals += 6;
}

enum class PhaseStop { ReachedEnd, Event, Underflow, Domain, StepBudget };

struct PhaseResult {
  PhaseStop stop = PhaseStop::ReachedEnd;
  double t = 0.0;
  State y{0.0, 0.0};
  std::string detail;
};

// Integrates y' = f(t, y) from t0 to t_end, stopping early when the V
// component reaches v_target (located by step bisection).
template <class F, class Rec>
PhaseResult integrate_phase(F&& f, double t0, State y0, double t_end, double v_target,
                            double rtol, double atol, double h_max, long max_steps,
                            StepperStats& stats, Rec&& record) {
  PhaseResult res;
  double t = t0;
  State y = y0;
  record(t, y);

  State k1;
  try {
    k1 = f(t, y);
    ++stats.evals;
  } catch (const std::domain_error& e) {
    return {PhaseStop::Domain, t, y, e.what()};
  }

  double h = std::min(h_max, (t_end - t0) / 100.0);
  long steps = 0;
  while (t < t_end) {
    if (++steps > max_steps) return {PhaseStop::StepBudget, t, y, "step budget exhausted"};
    h = std::min(h, t_end - t);
    const double h_min = 1e-15 * std::max(1.0, std::abs(t));
    if (h < h_min) return {PhaseStop::Underflow, t, y, "step size underflow"};

    State ynew, k7, err;
    bool stage_domain_error = false;
    try {
      dopri_stages(f, t, y, h, k1, ynew, k7, err, stats);
    } catch (const std::domain_error&) {
      stage_domain_error = true;
    }
    if (stage_domain_error) {
      h *= 0.25;
      continue;
    }

    double err_norm = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double e = err[i] / sc;
      err_norm += e * e;
    }
    err_norm = std::sqrt(0.5 * err_norm);

    if (err_norm <= 1.0) {
      stats.max_err = std::max(stats.max_err, std::abs(err[0]));
      if (ynew[0] >= v_target) {
        // Locate the crossing inside the step by bisection on substeps.
        double lo = 0.0, hi = h;
        State yev = ynew;
        for (int it = 0; it < 80 && (hi - lo) > 1e-16 * h; ++it) {
          const double mid = 0.5 * (lo + hi);
          State ymid, kdump, edump;
          try {
            dopri_stages(f, t, y, mid, k1, ymid, kdump, edump, stats);
          } catch (const std::domain_error&) {
            hi = mid;
            continue;
          }
          if (ymid[0] >= v_target) {
            hi = mid;
            yev = ymid;
          } else {
            lo = mid;
          }
        }
        record(t + hi, yev);
        return {PhaseStop::Event, t + hi, yev, ""};
      }
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      record(t, y);
      if (t >= t_end) break;
    }
    const double factor =
        err_norm > 0.0 ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0) : 5.0;
    h = std::min(h * factor, h_max);
  }
  return {PhaseStop::ReachedEnd, t, y, ""};
}

}  // namespace

void SolveTolerances::validate() const {
  auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
  if (!positive(hit_tol) || !positive(boundary_tol) || !positive(residual_tol) ||
      !positive(theta0) || !positive(theta_switch) || !positive(step_rtol) ||
      !positive(step_atol) || !positive(search_max_step) || !positive(profile_step_theta) ||
      !positive(profile_step_s))
    throw std::invalid_argument("tolerances must be positive and finite");
  if (!(theta0 < theta_switch && theta_switch < 1.0))
    throw std::invalid_argument("need theta0 < theta_switch < 1");
  if (boundary_tol >= 0.1) throw std::invalid_argument("boundary_tol too large");
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
}

double rhs_theta(const OdeParams& p, double theta, double v, double v_dot) {
  return rhs_theta_impl(OdeReal(p), theta, v, v_dot);
}

double rhs_theta_log_form(const OdeParams& p, double theta, double v, double v_dot) {
  const OdeReal P(p);
  check_domain(P, theta, v);
  double S = 0.0;
  for (const auto& [ab, mult] : P.a_bars) S += mult / (ab * ab - v);
  const double log_rhs =
      (2.0 * (1.0 + P.alpha_prime) - P.c_hat * std::sqrt(v / theta)) / (1.0 - theta) +
      P.alpha / theta;
  return v_dot * (log_rhs - P.alpha * v_dot / v + v_dot * S);
}

double rhs_theta_total_derivative(const OdeParams& p, double theta, double v, double v_dot,
                                  double v_ddot) {
  const OdeReal P(p);
  check_domain(P, theta, v);
  double S = 0.0, dS = 0.0;
  for (const auto& [ab, mult] : P.a_bars) {
    const double d = ab * ab - v;
    S += mult / d;
    dS += mult / (d * d);
  }
  const double Pv = S - P.alpha / v;
  const double dPv = dS + P.alpha / (v * v);
  const double root = P.c_hat * std::sqrt(v / theta);
  const double Q = (2.0 * (1.0 + P.alpha_prime) - root) / (1.0 - theta) + P.alpha / theta;
  const double dQ_dv = -P.c_hat / (2.0 * std::sqrt(v * theta) * (1.0 - theta));
  const double dQ_dth = (2.0 * (1.0 + P.alpha_prime) - root) / ((1.0 - theta) * (1.0 - theta)) +
                        P.c_hat * std::sqrt(v) / (2.0 * std::pow(theta, 1.5) * (1.0 - theta)) -
                        P.alpha / (theta * theta);
  return v_dot * dQ_dth + v_dot * v_dot * v_dot * dPv + v_dot * v_dot * dQ_dv +
         2.0 * v_dot * v_ddot * Pv + v_ddot * Q;
}

double series_v2(const OdeParams& p, double v1) {
  if (!(v1 > 0.0)) throw std::invalid_argument("v1 must be positive");
  return series_v2_impl(OdeReal(p), v1);
}

std::pair<double, double> series_start(const OdeParams& p, double v1, double theta0) {
  if (!(v1 > 0.0)) throw std::invalid_argument("v1 must be positive");
  if (!(theta0 > 0.0 && theta0 < 1.0)) throw std::invalid_argument("theta0 outside (0,1)");
  const double v2 = series_v2_impl(OdeReal(p), v1);
  return {v1 * theta0 + v2 * theta0 * theta0, v1 + 2.0 * v2 * theta0};
}

ShootOutcome shoot(const OdeParams& p, double v1, double theta0, double theta_end,
                   const SolveTolerances& tol, SolutionProfile* record) {
  tol.validate();
  if (!(theta0 < theta_end && theta_end < 1.0))
    throw std::invalid_argument("need theta0 < theta_end < 1");
  const OdeReal P(p);
  const double target = P.v_ceiling - tol.hit_tol;

  const auto [v0, vd0] = series_start(p, v1, theta0);
  auto push = [&](double th, double v, double vd) {
    if (record) {
      if (!record->theta.empty() && th <= record->theta.back()) return;
      record->theta.push_back(th);
      record->v.push_back(v);
      record->v_dot.push_back(vd);
    }
  };
  if (v0 >= target) {
    push(theta0, v0, vd0);
    return {ShootResult::HitCeiling, theta0, 0.0, ""};
  }
  if (!(v0 > 0.0) || v0 >= P.min_absq)
    return {ShootResult::DomainError, 0.0, 0.0, "series start leaves the domain"};

  StepperStats stats;
  auto f_theta = [&P](double t, const State& y) -> State {
    return {y[1], rhs_theta_impl(P, t, y[0], y[1])};
  };
  const double theta_sw = std::min(tol.theta_switch, theta_end);
  const double h_theta = record ? tol.profile_step_theta : tol.search_max_step;
  auto rec_theta = [&](double t, const State& y) { push(t, y[0], y[1]); };

  PhaseResult r1 = integrate_phase(f_theta, theta0, {v0, vd0}, theta_sw, target, tol.step_rtol,
                                   tol.step_atol, h_theta, tol.max_steps, stats, rec_theta);
  auto finish = [&](ShootOutcome out) {
    if (record) {
      record->meta.rhs_evaluations += stats.evals;
      record->meta.max_local_error = std::max(record->meta.max_local_error, stats.max_err);
    }
    return out;
  };
  switch (r1.stop) {
    case PhaseStop::Event: return finish({ShootResult::HitCeiling, r1.t, 0.0, ""});
    case PhaseStop::Domain: return finish({ShootResult::DomainError, 0.0, 0.0, r1.detail});
    case PhaseStop::Underflow:
    case PhaseStop::StepBudget: return finish({ShootResult::DomainError, 0.0, 0.0, r1.detail});
    case PhaseStop::ReachedEnd: break;
  }
  if (theta_end <= tol.theta_switch) return finish({ShootResult::Undershoot, 0.0, r1.y[0], ""});

  // Tame the 1/(1-theta) factor: continue in s = -log(1-theta).
  const double s0 = -std::log1p(-theta_sw);
  const double s_end = -std::log1p(-theta_end);
  auto f_s = [&P](double s, const State& y) -> State {
    return {y[1], rhs_s_impl(P, s, y[0], y[1])};
  };
  auto rec_s = [&](double s, const State& y) {
    const double one_minus_theta = std::exp(-s);
    push(1.0 - one_minus_theta, y[0], y[1] / one_minus_theta);
  };
  const double h_s = record ? tol.profile_step_s : 0.05;
  State ys{r1.y[0], r1.y[1] * (1.0 - theta_sw)};
  PhaseResult r2 = integrate_phase(f_s, s0, ys, s_end, target, tol.step_rtol, tol.step_atol, h_s,
                                   tol.max_steps, stats, rec_s);
  switch (r2.stop) {
    case PhaseStop::Event: return finish({ShootResult::HitCeiling, -std::expm1(-r2.t), 0.0, ""});
    case PhaseStop::Domain:
    case PhaseStop::Underflow:
    case PhaseStop::StepBudget: return finish({ShootResult::DomainError, 0.0, 0.0, r2.detail});
    case PhaseStop::ReachedEnd: break;
  }
  return finish({ShootResult::Undershoot, 0.0, r2.y[0], ""});
}

SolutionProfile solve_bvp(const OdeParams& p, const SolveTolerances& tol, bool force) {
  tol.validate();
  if (!p.condition_d && !force)
    throw SolveError(SolveError::Code::ConditionDViolated,
                     p.label() + ": coefficient condition fails; pass force to attempt anyway");

  const double theta_end = 1.0 - tol.boundary_tol / 10.0;
  int iterations = 0;
  auto classify = [&](double v1) {
    ++iterations;
    return shoot(p, v1, tol.theta0, theta_end, tol);
  };

  // Geometric scan for an undershoot/hit bracket.
  double lo = 0.0, hi = 0.0;
  bool domain_trouble = false;
  double v = 1.0;
  for (int k = 0; k < 120 && (lo == 0.0 || hi == 0.0); ++k) {
    if (v < 1e-12 || v > 1e12) break;
    const ShootOutcome out = classify(v);
    if (out.result == ShootResult::Undershoot) {
      lo = v;
      if (hi == 0.0) v *= 2.0;
    } else {
      if (out.result == ShootResult::DomainError) domain_trouble = true;
      hi = v;
      if (lo == 0.0) v /= 2.0;
    }
  }
  if (lo == 0.0 || hi == 0.0) {
    if (!p.condition_d)
      throw SolveError(SolveError::Code::ConditionDViolated,
                       p.label() + ": integration degenerates on a forced excluded case");
    throw SolveError(SolveError::Code::NoBracket,
                     p.label() + ": no undershoot/hit bracket found in the slope scan");
  }

  while ((hi - lo) > 1e-13 * hi && iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    const ShootOutcome out = classify(mid);
    if (out.result == ShootResult::Undershoot) {
      lo = mid;
    } else {
      if (out.result == ShootResult::DomainError) domain_trouble = true;
      hi = mid;
    }
  }

  SolutionProfile prof;
  const ShootOutcome final_out = shoot(p, hi, tol.theta0, theta_end, tol, &prof);
  if (final_out.result != ShootResult::HitCeiling ||
      final_out.theta_hit < 1.0 - tol.boundary_tol) {
    if (!p.condition_d || domain_trouble)
      throw SolveError(SolveError::Code::ConditionDViolated,
                       p.label() + ": integration degenerates on a forced excluded case");
    throw SolveError(SolveError::Code::NoBracket,
                     p.label() + ": accepted slope does not reach the ceiling near theta = 1");
  }

  prof.v1 = hi;
  prof.meta.shooting_iterations = iterations;
  prof.meta.final_bracket_width = (hi - lo) / hi;

  // Extrapolate the slope at theta = 1 from the tail: least squares of
  // dV/dtheta against (1 - theta).
  {
    double s00 = 0, s01 = 0, s11 = 0, b0 = 0, b1 = 0;
    const double window = std::max(1e-4, 10.0 * tol.boundary_tol);
    for (size_t i = 0; i < prof.theta.size(); ++i) {
      const double u = 1.0 - prof.theta[i];
      if (u > window) continue;
      s00 += 1.0;
      s01 += u;
      s11 += u * u;
      b0 += prof.v_dot[i];
      b1 += prof.v_dot[i] * u;
    }
    const double det = s00 * s11 - s01 * s01;
    prof.v_dot_at_1 = det != 0.0 ? (s11 * b0 - s01 * b1) / det
                                 : (prof.v_dot.empty() ? 0.0 : prof.v_dot.back());
  }

  prof.meta.max_residual = max_profile_residual(prof, p, tol.theta_switch);
  if (prof.meta.max_residual > tol.residual_tol)
    throw SolveError(SolveError::Code::DomainError,
                     p.label() + ": converged profile exceeds the residual tolerance");
  return prof;
}

namespace {

// First-derivative weights of the degree-(n-1) Lagrange interpolant at the
// center node x[c].
void lagrange_derivative_weights(const double* x, int n, int c, double* w) {
  for (int j = 0; j < n; ++j) {
    if (j == c) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        if (k != c) s += 1.0 / (x[c] - x[k]);
      w[j] = s;
    } else {
      double num = 1.0, den = 1.0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        if (k != c) num *= x[c] - x[k];
        den *= x[j] - x[k];
      }
      w[j] = num / den;
    }
  }
}

}  // namespace

double max_profile_residual(const SolutionProfile& prof, const OdeParams& p,
                            double theta_switch) {
  const OdeReal P(p);
  const size_t n = prof.theta.size();
  if (n < 5) return 0.0;
  size_t split = n;
  for (size_t i = 0; i < n; ++i) {
    if (prof.theta[i] >= theta_switch) {
      split = i;
      break;
    }
  }
  double worst = 0.0;
  // theta phase, the equation in its direct form
  if (split >= 5) {
    for (size_t i = 2; i + 2 < split; ++i) {
      double xs[5], w[5];
      for (int k = 0; k < 5; ++k) xs[k] = prof.theta[i - 2 + k];
      lagrange_derivative_weights(xs, 5, 2, w);
      double d = 0.0;
      for (int k = 0; k < 5; ++k) d += w[k] * prof.v_dot[i - 2 + k];
      worst = std::max(worst, std::abs(d - rhs_theta_impl(P, prof.theta[i], prof.v[i],
                                                          prof.v_dot[i])));
    }
  }
  // s phase, the equation under the designated change of variable
  if (n - split >= 5) {
    for (size_t i = split + 2; i + 2 < n; ++i) {
      double xs[5], ws[5], wv[5];
      for (int k = 0; k < 5; ++k) {
        const size_t j = i - 2 + k;
        xs[k] = -std::log1p(-prof.theta[j]);
        wv[k] = prof.v_dot[j] * (1.0 - prof.theta[j]);
      }
      lagrange_derivative_weights(xs, 5, 2, ws);
      double d = 0.0;
      for (int k = 0; k < 5; ++k) d += ws[k] * wv[k];
      const double s_i = xs[2];
      worst = std::max(
          worst, std::abs(d - rhs_s_impl(P, s_i, prof.v[i], prof.v_dot[i] *
                                                                (1.0 - prof.theta[i]))));
    }
  }
  return worst;
}

BoundReport verify_slope_bound(const SolutionProfile& prof, const OdeParams& p, int pairs,
                               unsigned seed) {
  const OdeReal P(p);
  BoundReport rep;
  const size_t n = prof.theta.size();
  if (n < 2) return rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  rep.worst_margin = std::numeric_limits<double>::infinity();
  rep.pass = true;
  while (rep.pairs_checked < pairs) {
    size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const double t1 = prof.theta[i], t2 = prof.theta[j];
    const double V1 = prof.v[i], V2 = prof.v[j];
    const double D1 = prof.v_dot[i], D2 = prof.v_dot[j];
    const double log_ratio_t = std::log(t2 / t1);
    double lhs = P.alpha * log_ratio_t +
                 4.0 * (1.0 + P.alpha_prime) *
                     std::log((1.0 + std::sqrt(t1)) / (1.0 + std::sqrt(t2)));
    double mid = std::log(D2 / D1) + P.alpha * std::log(V2 / V1);
    for (const auto& [ab, mult] : P.a_bars)
      mid += mult * std::log((ab * ab - V2) / (ab * ab - V1));
    double rhs = P.alpha * log_ratio_t +
                 2.0 * (1.0 + P.alpha_prime) * std::log((1.0 - t1) / (1.0 - t2));
    const double margin = std::min(mid - lhs, rhs - mid);
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (!(mid > lhs && mid < rhs)) rep.pass = false;
    ++rep.pairs_checked;
  }
  return rep;
}

DecayReport verify_tail_decay(const SolutionProfile& prof, const OdeParams& p, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  (void)p;
  DecayReport rep;
  const size_t n = prof.theta.size();
  if (n == 0) return rep;
  const double u_end = 1.0 - prof.theta.back();
  const double last_lo = u_end, last_hi = 10.0 * u_end;
  const double prev_lo = last_hi, prev_hi = 100.0 * u_end;
  double m_last = 0.0, m_prev = 0.0;
  rep.m_eps = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double u = 1.0 - prof.theta[i];
    const double q = prof.v_dot[i] * std::pow(u, 2.0 * eps);
    if (prof.theta[i] > 0.5) rep.m_eps = std::max(rep.m_eps, q);
    if (u >= last_lo && u <= last_hi) m_last = std::max(m_last, q);
    if (u > prev_lo && u <= prev_hi) m_prev = std::max(m_prev, q);
  }
  rep.growth_ratio = m_prev > 0.0 ? m_last / m_prev : 0.0;
  rep.bounded = m_prev > 0.0 && rep.growth_ratio <= 1.2;
  return rep;
}

ProfileInterpolant::ProfileInterpolant(const SolutionProfile& prof, const OdeParams& p)
    : theta_(prof.theta), v_(prof.v), vd_(prof.v_dot) {
  if (theta_.size() < 2) throw std::invalid_argument("profile too short to interpolate");
  const OdeReal P(p);
  vdd_.resize(theta_.size());
  for (size_t i = 0; i < theta_.size(); ++i)
    vdd_[i] = rhs_theta_impl(P, theta_[i], v_[i], vd_[i]);
  v1_ = prof.v1;
  v2_ = series_v2_impl(P, prof.v1);
}

size_t ProfileInterpolant::interval(double theta) const {
  const auto it = std::upper_bound(theta_.begin(), theta_.end(), theta);
  size_t i = static_cast<size_t>(it - theta_.begin());
  if (i == 0) return 0;
  if (i >= theta_.size()) return theta_.size() - 2;
  return i - 1;
}

double ProfileInterpolant::v(double theta) const {
  if (theta < 0.0 || theta > theta_.back() * (1.0 + 1e-12))
    throw std::out_of_range("theta outside the profile range");
  if (theta <= theta_.front()) return v1_ * theta + v2_ * theta * theta;
  const size_t i = interval(theta);
  const double h = theta_[i + 1] - theta_[i];
  const double u = (theta - theta_[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * v_[i] + (u3 - 2 * u2 + u) * h * vd_[i] +
         (-2 * u3 + 3 * u2) * v_[i + 1] + (u3 - u2) * h * vd_[i + 1];
}

double ProfileInterpolant::v_dot(double theta) const {
  if (theta < 0.0 || theta > theta_.back() * (1.0 + 1e-12))
    throw std::out_of_range("theta outside the profile range");
  if (theta <= theta_.front()) return v1_ + 2.0 * v2_ * theta;
  const size_t i = interval(theta);
  const double h = theta_[i + 1] - theta_[i];
  const double u = (theta - theta_[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * vd_[i] + (u3 - 2 * u2 + u) * h * vdd_[i] +
         (-2 * u3 + 3 * u2) * vd_[i + 1] + (u3 - u2) * h * vdd_[i + 1];
}

}  // namespace kecoh

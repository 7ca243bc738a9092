#include "kecoh/metric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace kecoh {

namespace {

double theta_d_norm_sq_d(const OdeParams& p) {
  // einstein_constant = c_hat * eps_F / |theta_D|^2
  return to_double(p.c_hat * p.epsilon_f / p.einstein_constant);
}

void weights5(const double* x, double* w) {
  for (int j = 0; j < 5; ++j) {
    if (j == 2) {
      double s = 0.0;
      for (int k = 0; k < 5; ++k)
        if (k != 2) s += 1.0 / (x[2] - x[k]);
      w[j] = s;
    } else {
      double num = 1.0, den = 1.0;
      for (int k = 0; k < 5; ++k) {
        if (k == j) continue;
        if (k != 2) num *= x[2] - x[k];
        den *= x[j] - x[k];
      }
      w[j] = num / den;
    }
  }
}

}  // namespace

MetricMap::MetricMap(const SolutionProfile& prof, const OdeParams& p)
    : interp_(prof, p), params_(p), eps_f_(p.epsilon_f) {
  theta_max_ = interp_.theta_max();
}

double MetricMap::theta_of_t(double t) const {
  const double th = std::tanh(eps_f_ * std::abs(t));
  return th * th;
}

double MetricMap::t_max() const {
  double t = std::atanh(std::sqrt(theta_max_)) / eps_f_;
  while (theta_of_t(t) > theta_max_) t *= 1.0 - 1e-12;
  return t;
}

MetricMap::ThetaState MetricMap::state(double theta) const {
  ThetaState s;
  s.theta = theta;
  s.v = interp_.v(theta);
  s.v_dot = interp_.v_dot(theta);
  s.v_ddot = rhs_theta(params_, theta, s.v, s.v_dot);
  s.v_dddot = rhs_theta_total_derivative(params_, theta, s.v, s.v_dot, s.v_ddot);
  return s;
}

double MetricMap::f(double t) const {
  if (t == 0.0) return 0.0;
  const double sign = t < 0.0 ? -1.0 : 1.0;
  return sign * std::sqrt(interp_.v(theta_of_t(t)));
}

double MetricMap::f_prime(double t) const {
  if (t == 0.0) {
    // lim f' = eps_F sqrt(v1)
    return eps_f_ * std::sqrt(interp_.v_dot(0.0));
  }
  const ThetaState s = state(theta_of_t(t));
  return eps_f_ * s.v_dot * std::sqrt(s.theta / s.v) * (1.0 - s.theta);
}

double MetricMap::f_second(double t) const {
  if (t == 0.0) return 0.0;
  const double sign = t < 0.0 ? -1.0 : 1.0;
  const ThetaState s = state(theta_of_t(t));
  const double th = s.theta, v = s.v, vd = s.v_dot, vdd = s.v_ddot;
  const double K = 2.0 * th * (1.0 - th) * vdd + (1.0 - 3.0 * th) * vd -
                   th * (1.0 - th) * vd * vd / v;
  return sign * eps_f_ * eps_f_ * (1.0 - th) * K / std::sqrt(v);
}

double MetricMap::f_third(double t) const {
  if (t == 0.0) {
    // series limit of the odd extension
    const double v1 = interp_.v_dot(0.0);
    const double v2 = series_v2(params_, v1);
    return eps_f_ * eps_f_ * eps_f_ * (3.0 * v2 - 2.0 * v1) / std::sqrt(v1);
  }
  // f''' is even in t
  const ThetaState s = state(theta_of_t(t));
  const double th = s.theta, v = s.v, vd = s.v_dot, vdd = s.v_ddot, vddd = s.v_dddot;
  const double sv = std::sqrt(v);
  const double K = 2.0 * th * (1.0 - th) * vdd + (1.0 - 3.0 * th) * vd -
                   th * (1.0 - th) * vd * vd / v;
  const double Kp = 2.0 * (1.0 - 2.0 * th) * vdd + 2.0 * th * (1.0 - th) * vddd - 3.0 * vd +
                    (1.0 - 3.0 * th) * vdd -
                    ((1.0 - 2.0 * th) * vd * vd / v + 2.0 * th * (1.0 - th) * vd * vdd / v -
                     th * (1.0 - th) * vd * vd * vd / (v * v));
  const double Hp = (-K + (1.0 - th) * Kp) / sv - (1.0 - th) * K * vd / (2.0 * v * sv);
  return 2.0 * eps_f_ * eps_f_ * eps_f_ * std::sqrt(th) * (1.0 - th) * Hp;
}

double MetricMap::c3_quantity(double t) const {
  const ThetaState s = state(theta_of_t(t));
  const double em = std::exp(-2.0 * eps_f_ * t);
  const double boost = 4.0 / ((1.0 + em) * (1.0 + em));  // e^{2 eps t} (1 - theta), exactly
  return eps_f_ * s.v_dot * std::sqrt(s.theta / s.v) * boost;
}

double MetricMap::subleading_quantity(double t) const {
  const ThetaState s = state(theta_of_t(t));
  const double th = s.theta;
  const double st = std::sqrt(th);
  // 1 + f''/(2 eps f') = (1-theta)[(2 Vdd/Vd - Vd/V) sqrt(th) + (3 sqrt(th)+1)/(sqrt(th)(1+sqrt(th)))]/2
  const double bracket = (2.0 * s.v_ddot / s.v_dot - s.v_dot / s.v) * st +
                         (3.0 * st + 1.0) / (st * (1.0 + st));
  const double em = std::exp(-2.0 * eps_f_ * t);
  const double boost = 4.0 * std::exp(-eps_f_ * t) / ((1.0 + em) * (1.0 + em));  // e^{eps t}(1-theta)
  return 0.5 * boost * bracket;
}

double MetricMap::c4_quantity(double t) const {
  const double fp = f_prime(t);
  const double A = f_second(t) / (eps_f_ * fp);
  const double B = f_third(t) / (eps_f_ * eps_f_ * fp);
  return std::exp(2.0 * eps_f_ * t) * (1.0 + 5.0 * A / 6.0 + B / 6.0);
}

MetricProfile reconstruct(const SolutionProfile& prof, const OdeParams& p,
                          const std::vector<double>& t_grid) {
  MetricMap map(prof, p);
  const double norm_sq = theta_d_norm_sq_d(p);
  MetricProfile m;
  for (const auto& [ab, mult] : p.a_bars) {
    m.a_bars.push_back(to_double(ab));
    m.a_mults.push_back(mult);
  }
  const size_t nl = m.a_bars.size();
  m.fiber_minus.resize(nl);
  m.fiber_plus.resize(nl);
  m.base.resize(nl);

  double prev = 0.0;
  for (const double t : t_grid) {
    if (!(t > 0.0) || t <= prev) throw std::invalid_argument("t grid must be positive increasing");
    prev = t;
    const double theta = map.theta_of_t(t);
    if (theta > map.theta_of_t(map.t_max()))
      throw std::out_of_range("t outside the representable range of the profile");
    m.t.push_back(t);
    const double ft = map.f(t);
    m.f.push_back(ft);
    m.f_prime.push_back(map.f_prime(t));
    m.f_second.push_back(map.f_second(t));
    m.f_third.push_back(map.f_third(t));
    m.transversal.push_back(norm_sq * m.f_prime.back());
    for (size_t l = 0; l < nl; ++l) {
      m.fiber_minus[l].push_back(m.a_bars[l] - ft);
      m.fiber_plus[l].push_back(m.a_bars[l] + ft);
      m.base[l].push_back(m.a_bars[l] * m.a_bars[l] - ft * ft);
    }
  }
  return m;
}

std::vector<double> default_t_grid(const SolutionProfile& prof, const OdeParams& p, int points,
                                   double t_lo) {
  if (points < 8) throw std::invalid_argument("need at least 8 grid points");
  MetricMap map(prof, p);
  const double t_hi = map.t_max();
  if (!(t_lo > 0.0 && 2.0 * t_lo < t_hi)) throw std::invalid_argument("t_lo out of range");
  std::set<double> grid;
  grid.insert(t_lo);
  grid.insert(2.0 * t_lo);  // origin extrapolation anchors
  const double ratio = std::pow(t_hi / t_lo, 1.0 / (points - 1));
  double t = t_lo;
  for (int i = 1; i < points; ++i) {
    t *= ratio;
    grid.insert(std::min(t, t_hi));
  }
  // refine the final decade of (1 - theta) for the decay-rate checks
  const double span = std::log(10.0) / (2.0 * p.epsilon_f);
  for (int j = 0; j <= 8; ++j) grid.insert(t_hi - span + span * j / 8.0);
  return {grid.begin(), grid.end()};
}

double einstein_residual_t(const MetricProfile& m, const OdeParams& p) {
  const double c_tilde = 2.0 * p.epsilon_f * to_double(p.c_hat);
  double worst = 0.0;
  for (size_t i = 0; i < m.t.size(); ++i) {
    const double t = m.t[i], f = m.f[i], fp = m.f_prime[i], fpp = m.f_second[i];
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (f == 0.0) throw std::domain_error("f vanishes on the grid");
    if (fp == 0.0) throw std::domain_error("f' vanishes on the grid");
    double pair_sum = 0.0;
    for (size_t l = 0; l < m.a_bars.size(); ++l) {
      const double ab = m.a_bars[l];
      pair_sum += m.a_mults[l] * (1.0 / (f + ab) + 1.0 / (f - ab));
    }
    const double r = fpp / fp + fp * (p.n_f / f + pair_sum) + c_tilde * f -
                     p.n_f * (std::tanh(t) + 1.0 / std::tanh(t));
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double einstein_residual_t_fd(const MetricMap& map, const OdeParams& p,
                              const std::vector<double>& t_points) {
  const double c_tilde = 2.0 * p.epsilon_f * to_double(p.c_hat);
  const double h = 1e-3;
  double worst = 0.0;
  for (const double t : t_points) {
    double xs[5], fp[5], w[5];
    for (int k = 0; k < 5; ++k) {
      xs[k] = t + (k - 2) * h;
      fp[k] = map.f_prime(xs[k]);
    }
    weights5(xs, w);
    double fpp = 0.0;
    for (int k = 0; k < 5; ++k) fpp += w[k] * fp[k];
    const double f = map.f(t);
    double pair_sum = 0.0;
    for (const auto& [ab, mult] : p.a_bars) {
      const double a = to_double(ab);
      pair_sum += mult * (1.0 / (f + a) + 1.0 / (f - a));
    }
    const double r = fpp / fp[2] + fp[2] * (p.n_f / f + pair_sum) + c_tilde * f -
                     p.n_f * (std::tanh(t) + 1.0 / std::tanh(t));
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double kahler_potential(const SolutionProfile& prof, const OdeParams& p, double t) {
  if (t < 0.0) throw std::out_of_range("t must be nonnegative");
  if (t == 0.0) return 0.0;
  MetricMap map(prof, p);
  if (t > map.t_max()) throw std::out_of_range("t outside the representable range");
  const int n = 2048;  // even
  const double h = t / n;
  double acc = map.f(0.0) + map.f(t);
  for (int i = 1; i < n; ++i) acc += map.f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return theta_d_norm_sq_d(p) * acc * h / 3.0;
}

bool ExtensionReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckItem* ExtensionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ExtensionReport verify_smooth_extension(const MetricProfile& m, const SolutionProfile& prof,
                                        const OdeParams& p, const ExtensionTolerances& tol) {
  ExtensionReport rep;
  const size_t n = m.t.size();
  if (n < 8) throw std::invalid_argument("metric grid too short to verify");
  auto add = [&](const std::string& name, bool pass, double measured,
                 const std::string& detail = "") {
    rep.checks.push_back({name, pass, measured, detail});
  };

  // (1) positivity of every component on the grid
  double min_comp = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    min_comp = std::min({min_comp, m.f[i], m.f_prime[i], m.transversal[i]});
    for (size_t l = 0; l < m.a_bars.size(); ++l)
      min_comp = std::min({min_comp, m.fiber_minus[l][i], m.fiber_plus[l][i], m.base[l][i]});
  }
  add("components_positive", min_comp > 0.0, min_comp);

  // (2) the equation residual carried by the profile
  add("einstein_equation_residual", prof.meta.max_residual <= 1e-7, prof.meta.max_residual);

  // (3) behavior at the origin, from the two smallest grid points
  {
    const double t1 = m.t[0], t2 = m.t[1];
    const double f0 = (m.f[0] * t2 - m.f[1] * t1) / (t2 - t1);
    const double fpp0 = (m.f_second[0] * t2 - m.f_second[1] * t1) / (t2 - t1);
    const double c1 = (m.f[1] - m.f[0]) / (t2 - t1);
    const double c2 = m.f_third[0];
    add("f_vanishes_at_origin", std::abs(f0) < tol.origin_tol, f0,
        "extrapolated from t = " + std::to_string(t1));
    add("f_second_vanishes_at_origin", std::abs(fpp0) < tol.origin_tol, fpp0);
    add("c1_finite_positive", std::isfinite(c1) && c1 > 0.0, c1);
    add("c2_finite", std::isfinite(c2), c2);
  }

  // (4) limits at infinity
  const double sqrt_vc = std::sqrt(to_double(p.v_ceiling));
  const double vc = to_double(p.v_ceiling);
  add("f_limit", std::abs(m.f[n - 1] - sqrt_vc) < tol.limit_tol, m.f[n - 1]);
  {
    double worst = 0.0;
    bool positive = true;
    for (size_t l = 0; l < m.a_bars.size(); ++l) {
      const double base_lim = m.a_bars[l] * m.a_bars[l] - vc;
      const double fib_lim = m.a_bars[l] - sqrt_vc;
      worst = std::max(worst, std::abs(m.base[l][n - 1] - base_lim));
      worst = std::max(worst, std::abs(m.fiber_minus[l][n - 1] - fib_lim));
      if (!(base_lim > 0.0) || !(fib_lim > 0.0)) positive = false;
    }
    add("component_limits", positive && worst < tol.limit_tol, worst);
  }

  // decay-rate constants over the final decade of (1 - theta)
  {
    const double t_end = m.t[n - 1];
    const double span = std::log(10.0) / (2.0 * p.epsilon_f);
    std::vector<size_t> window;
    for (size_t i = 0; i < n; ++i)
      if (m.t[i] >= t_end - span) window.push_back(i);
    double c3_min = std::numeric_limits<double>::infinity(), c3_max = 0.0;
    for (const size_t i : window) {
      const double c3 = std::exp(2.0 * p.epsilon_f * m.t[i]) * m.f_prime[i];
      c3_min = std::min(c3_min, c3);
      c3_max = std::max(c3_max, c3);
    }
    const double c3_end = std::exp(2.0 * p.epsilon_f * t_end) * m.f_prime[n - 1];
    const bool stable = c3_min > 0.0 && (c3_max / c3_min - 1.0) <= tol.c3_stability;
    add("c3_finite_positive_stable", std::isfinite(c3_end) && c3_end > 0.0 && stable, c3_end,
        "wobble " + std::to_string(c3_min > 0.0 ? c3_max / c3_min - 1.0 : -1.0));

    const size_t i0 = window.front();
    auto subleading = [&](size_t i) {
      return std::exp(p.epsilon_f * m.t[i]) *
             (1.0 + m.f_second[i] / (2.0 * p.epsilon_f * m.f_prime[i]));
    };
    const double q0 = subleading(i0), q1 = subleading(n - 1);
    const bool decays = std::abs(q1) < 1e-6 || std::abs(q1) <= 0.6 * std::abs(q0);
    add("subleading_decays", decays, q1, "window start " + std::to_string(q0));

    auto c4_at = [&](size_t i) {
      const double A = m.f_second[i] / (p.epsilon_f * m.f_prime[i]);
      const double B = m.f_third[i] / (p.epsilon_f * p.epsilon_f * m.f_prime[i]);
      return std::exp(2.0 * p.epsilon_f * m.t[i]) * (1.0 + 5.0 * A / 6.0 + B / 6.0);
    };
    const double c40 = c4_at(i0), c41 = c4_at(n - 1);
    const bool c4ok = std::isfinite(c41) && std::abs(c41 - c40) <= 0.05 * std::max(1.0, std::abs(c41));
    add("c4_finite", c4ok, c41, "window start " + std::to_string(c40));
  }

  return rep;
}

}  // namespace kecoh

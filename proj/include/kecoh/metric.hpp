#pragma once

#include "kecoh/ode_solver.hpp"

#include <string>
#include <vector>

namespace kecoh {

// Metric data along the transversal curve, on a grid of t > 0.
//
// The profile function is f(t) = sqrt(V(tanh^2(eps_F t))); its derivatives
// come from the chain rule, with the second and third V-derivatives taken
// from the equation and its total derivative rather than from differencing.
// Components are reported in normalized units (|theta_D|^2 replaces the
// invariant-form normalization):
//   transversal            |theta_D|^2 f'(t)
//   fiber_minus/fiber_plus a_bar -+ f(t), one pair per distinct coefficient
//   base                   a_bar^2 - V(theta(t))
struct MetricProfile {
  std::vector<double> t;
  std::vector<double> f, f_prime, f_second, f_third;
  std::vector<double> a_bars;
  std::vector<int> a_mults;
  std::vector<std::vector<double>> fiber_minus;  // [coefficient][grid point]
  std::vector<std::vector<double>> fiber_plus;
  std::vector<std::vector<double>> base;
  std::vector<double> transversal;
};

// Pointwise evaluation of f and its first three derivatives at any t whose
// image tanh^2(eps_F t) lies inside the profile range (the series extension
// covers small t). Negative t uses the odd extension f(-t) = -f(t).
class MetricMap {
 public:
  MetricMap(const SolutionProfile& prof, const OdeParams& p);

  double theta_of_t(double t) const;  // tanh^2(eps_F t)
  double t_max() const;               // largest representable t
  double f(double t) const;
  double f_prime(double t) const;
  double f_second(double t) const;
  double f_third(double t) const;

  // e^{2 eps_F t} f'(t) computed in a cancellation-free arrangement; this is
  // the decay-rate constant checked at large t.
  double c3_quantity(double t) const;
  // e^{eps_F t} (1 + f''/(2 eps_F f')), also cancellation-free.
  double subleading_quantity(double t) const;
  // e^{2 eps_F t} (1 + 5 f''/(6 eps_F f') + f'''/(6 eps_F^2 f')).
  double c4_quantity(double t) const;

 private:
  struct ThetaState {
    double theta, v, v_dot, v_ddot, v_dddot;
  };
  ThetaState state(double theta) const;

  ProfileInterpolant interp_;
  OdeParams params_;
  double eps_f_;
  double theta_max_;
};

MetricProfile reconstruct(const SolutionProfile& prof, const OdeParams& p,
                          const std::vector<double>& t_grid);

// Geometric grid from t_lo to the largest representable t.
std::vector<double> default_t_grid(const SolutionProfile& prof, const OdeParams& p, int points,
                                   double t_lo = 1e-4);

// Max absolute value over the grid of the t-space Einstein relation
//   f''/f' + f'(N_F/f + sum_j 1/(f + a_j)) + 2 eps_F c_hat f - N_F (tanh t + coth t),
// evaluated from the stored arrays. Throws std::domain_error when f vanishes
// on the grid.
double einstein_residual_t(const MetricProfile& m, const OdeParams& p);

// Same relation with the second derivative taken by finite differences of
// f' along t; independent of the chain-rule route that filled f_second.
double einstein_residual_t_fd(const MetricMap& map, const OdeParams& p,
                              const std::vector<double>& t_points);

// |theta_D|^2 * integral of f from 0 to t (composite Simpson on a fine grid).
double kahler_potential(const SolutionProfile& prof, const OdeParams& p, double t);

struct CheckItem {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  std::string detail;
};

struct ExtensionReport {
  std::vector<CheckItem> checks;
  bool all_pass() const;
  const CheckItem* find(const std::string& name) const;
};

struct ExtensionTolerances {
  double origin_tol = 1e-5;     // |f|, |f''| extrapolated to t = 0
  double origin_anchor = 1e-4;  // anchor scale of the extrapolation stencil
  double limit_tol = 1e-5;      // infinity limits of the components
  double c3_stability = 0.01;   // relative wobble of e^{2 eps t} f' on the tail
};

// Boundary-condition verification for the smooth extension of the metric:
// positivity of every component, vanishing of f and f'' at the origin with
// finite positive slope, and the prescribed exponential decay rates at
// infinity with the component limits a_bar -+ sqrt(v_ceiling) and
// a_bar^2 - v_ceiling.
ExtensionReport verify_smooth_extension(const MetricProfile& m, const SolutionProfile& prof,
                                        const OdeParams& p, const ExtensionTolerances& tol = {});

}  // namespace kecoh

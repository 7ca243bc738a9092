#pragma once

#include "kecoh/ode_params.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kecoh {

struct SolveTolerances {
  double hit_tol = 1e-10;        // ceiling proximity that counts as attained
  double boundary_tol = 1e-6;    // how close to theta = 1 the hit must land
  double residual_tol = 1e-8;    // cap on the measured interior residual
  double theta0 = 1e-6;          // series handoff point
  double theta_switch = 0.9;     // switch to s = -log(1 - theta) past here
  double step_rtol = 1e-11;
  double step_atol = 1e-13;
  double search_max_step = 1e-2;    // step cap while bracketing (theta phase)
  double profile_step_theta = 1e-4; // recording cap, theta phase
  double profile_step_s = 2e-3;     // recording cap, s phase
  long max_steps = 4000000;

  void validate() const;  // throws std::invalid_argument on nonsense
};

struct SolverMeta {
  int shooting_iterations = 0;
  double final_bracket_width = 0.0;  // relative width of the slope bracket
  double max_local_error = 0.0;      // largest accepted per-step error estimate
  double max_residual = 0.0;         // measured on the recorded grid
  long rhs_evaluations = 0;
};

// Solution of the boundary value problem on a recorded grid.
struct SolutionProfile {
  std::vector<double> theta;  // strictly increasing, in (0, 1)
  std::vector<double> v;
  std::vector<double> v_dot;
  double v1 = 0.0;            // fitted initial slope, lim_{theta->0} dV/dtheta
  double v_dot_at_1 = 0.0;    // extrapolated slope at theta = 1
  SolverMeta meta;
};

enum class ShootResult { HitCeiling, Undershoot, DomainError };

struct ShootOutcome {
  ShootResult result = ShootResult::Undershoot;
  double theta_hit = 0.0;  // set for HitCeiling
  double v_end = 0.0;      // set for Undershoot
  std::string detail;      // set for DomainError
};

class SolveError : public std::runtime_error {
 public:
  enum class Code { NoBracket, ConditionDViolated, DomainError, StepUnderflow };
  SolveError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Second derivative of V solving the equation at an interior state. The sum
// over coefficients runs over both signs of each +-pair. Throws
// std::domain_error outside 0 < theta < 1, 0 < V < min a_bar^2.
double rhs_theta(const OdeParams& p, double theta, double v, double v_dot);

// Same quantity evaluated through the log-derivative form of the equation;
// an independent algebraic route used for cross-checks.
double rhs_theta_log_form(const OdeParams& p, double theta, double v, double v_dot);

// Total theta-derivative of rhs_theta along a trajectory (gives the third
// derivative of V without any numerical differencing).
double rhs_theta_total_derivative(const OdeParams& p, double theta, double v, double v_dot,
                                  double v_ddot);

// Two-term series start near theta = 0: V ~ v1 t + v2 t^2 with
// v2 = [v1^2 sum_l m_l / a_bar_l^2 + v1 (2(1+a') - c_hat sqrt(v1))] / (2 + alpha),
// obtained by matching the lowest order of the equation. Returns (V, dV/dtheta)
// at theta0. Requires v1 > 0.
std::pair<double, double> series_start(const OdeParams& p, double v1, double theta0);
double series_v2(const OdeParams& p, double v1);

// Integrates the initial value problem started from series_start at theta0.
// Switches to s = -log(1-theta) once theta exceeds tol.theta_switch. Stops
// when V reaches v_ceiling - hit_tol (HitCeiling), when theta_end is reached
// (Undershoot), or when the state leaves the admissible domain (DomainError).
// When record is non-null the accepted steps are appended to it.
ShootOutcome shoot(const OdeParams& p, double v1, double theta0, double theta_end,
                   const SolveTolerances& tol, SolutionProfile* record = nullptr);

// Shooting solve: brackets the initial slope between an undershooting and a
// ceiling-hitting witness, bisects until the hit lands past 1 - boundary_tol,
// and returns the recorded profile of the accepted trajectory. Refuses cases
// failing the coefficient condition unless force is set. Throws SolveError.
SolutionProfile solve_bvp(const OdeParams& p, const SolveTolerances& tol = {}, bool force = false);

// Max finite-difference residual of the equation over the recorded grid,
// measured per integration phase in that phase's own coordinate (theta below
// theta_switch, s above it) with centered 5-point stencils.
double max_profile_residual(const SolutionProfile& prof, const OdeParams& p,
                            double theta_switch = 0.9);

// Two-sided growth bound on sampled grid pairs theta1 < theta2: in logs,
//   a log(t2/t1) + 4(1+a') log((1+sqrt(t1))/(1+sqrt(t2)))
//     <  log(Vd2/Vd1) + a log(V2/V1) + sum_l m_l log((ab^2-V2)/(ab^2-V1))
//     <  a log(t2/t1) + 2(1+a') log((1-t1)/(1-t2)).
struct BoundReport {
  bool pass = false;
  double worst_margin = 0.0;  // smallest log-gap over all sampled pairs
  int pairs_checked = 0;
};
BoundReport verify_slope_bound(const SolutionProfile& prof, const OdeParams& p, int pairs = 100,
                               unsigned seed = 12345);

// Tail decay: dV/dtheta (1-theta)^{2 eps} must stay bounded as theta -> 1.
struct DecayReport {
  bool bounded = false;
  double m_eps = 0.0;         // fitted bound constant
  double growth_ratio = 0.0;  // last-decade max over previous-decade max
};
DecayReport verify_tail_decay(const SolutionProfile& prof, const OdeParams& p, double eps);

// C^1 evaluation of V and dV/dtheta anywhere in [0, last grid point]: the
// two-term series below the first grid point, cubic Hermite on the grid.
class ProfileInterpolant {
 public:
  ProfileInterpolant(const SolutionProfile& prof, const OdeParams& p);

  double v(double theta) const;
  double v_dot(double theta) const;
  double theta_min() const { return theta_.empty() ? 0.0 : theta_.front(); }
  double theta_max() const { return theta_.empty() ? 0.0 : theta_.back(); }

 private:
  size_t interval(double theta) const;
  std::vector<double> theta_, v_, vd_, vdd_;
  double v1_ = 0.0, v2_ = 0.0;
};

}  // namespace kecoh

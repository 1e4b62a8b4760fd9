#pragma once

#include "tsmm/energy.hpp"

namespace tsmm {

/// One incremental problem: minimize over admissible eta
///   (tau*h/2) * || ((eta - eta_prev)/tau - v_prev) / h ||_H^2
///   + (eps*tau/2) * R((eta - eta_prev)/tau)
///   + E(eta) - <f_kl, eta>_H
/// where R is the model's dissipation seminorm (eps = 0 disables it).
struct IncrementalProblem {
  EnergyModelPtr model;
  Vec eta_prev;
  Vec v_prev;        // previous-window velocity quotient, or eta_star on the first window
  Vec f_kl;          // averaged forcing for this step
  double tau = 0.0;
  double h = 0.0;    // requires tau <= h
  double eps_dissipation = 0.0;

  void validate() const;
};

struct SolverSettings {
  /// Residual tolerance; NaN selects the default min(1e-10, tau^3).
  double grad_tol = std::numeric_limits<double>::quiet_NaN();
  int max_iters = 500;
  double armijo_slope = 1e-4;
  double backtrack_factor = 0.5;
  enum class InitialGuess { Previous, Extrapolated };
  InitialGuess initial_guess = InitialGuess::Extrapolated;
  /// When set, each accepted step also evaluates the one-step energy
  /// inequality and records its slack.
  bool check_energy_inequality = false;

  double resolved_grad_tol(double tau) const;
};

enum class StepStatus { Converged, NonConvergence, DomainExhausted };

struct StepResult {
  Vec eta_new;
  int iterations = 0;
  /// H-norm of the weight-normalized gradient at eta_new,
  /// sqrt(sum g_i^2 / w_i); for unit weights this is |g|.
  double residual = 0.0;
  StepStatus status = StepStatus::Converged;
  /// Filled when check_energy_inequality is on: overshoot of the one-step
  /// energy inequality, bounded by grad_tol * ||v_new||_H * tau on success.
  double energy_slack = 0.0;
  /// True when the kinetic curvature 1/(tau*h) exceeds the certified Hessian
  /// bound 2*C(K) on the step's sublevel, making the minimizer unique.
  bool strongly_convex = true;
};

double incremental_value(const IncrementalProblem& p, const Vec& eta);

/// Exact derivative of incremental_value; throws std::domain_error when eta
/// is inadmissible.
Vec incremental_gradient(const IncrementalProblem& p, const Vec& eta);

/// Damped Newton (Hessian models) or H-gradient descent, globalized by
/// Armijo backtracking; +infinity trial values count as line-search failures.
StepResult solve_step(const IncrementalProblem& p, const SolverSettings& s);

}  // namespace tsmm

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turnpike/types.hpp"

namespace turnpike {

// Feedback gain tied to a grid; the scheme needs h*beta < 1 strictly.
struct CheapControlParams {
  double beta;

  CheapControlParams(double beta, const TimeGrid& grid);
};

// Explicit constants of the cheap-control bound and its h -> 0 limit.
struct ConstantsLedger {
  double c0_tilde;
  double d0_tilde;
  double kernel_bound;
  double gamma;
  double beta;
  double h;
};

// u_k = beta (target - psi_k) - interaction row k. Cancels the coupling, so
// the closed loop contracts every agent toward the target at rate (1 - h*beta).
ControlMatrix feedback_control(const StateMatrix& state, const ModelParams& params,
                               double beta);

// Trajectory under the feedback law. States follow the exact contraction
//   psi^{i+1} = psi^i + h beta (target - psi^i)
// and the returned controls are the feedback evaluated along those states,
// so re-integrating them through the full dynamics reproduces the states.
std::pair<Trajectory, ControlSequence> closed_loop_rollout(const StateMatrix& initial,
                                                           const TimeGrid& grid,
                                                           const ModelParams& params,
                                                           double beta);

// Per-step factor (1 - h*beta)^2 by which the tracking Lyapunov function
// decays under the feedback law.
double decay_rate(double h, double beta);

// C0(h) = h / (1 - (1 - h beta)^2) * (2/gamma + 4 (beta^2 + 2 beta ||P|| + 2 ||P||^2)).
// Evaluated through the cancellation-free denominator beta (2 - h beta).
double c0_constant(double h, double beta, double gamma, double kernel_bound);

// D0 = (1/beta) (1/gamma + 2 (beta^2 + 2 beta ||P|| + 2 ||P||^2)), the
// h -> 0+ limit of c0_constant.
double d0_limit(double beta, double gamma, double kernel_bound);

ConstantsLedger make_constants_ledger(double h, double beta, double gamma,
                                      double kernel_bound);

struct UniformitySample {
  double h;
  double c0;
};

struct UniformityReport {
  bool passed = false;
  double d0_tilde = 0.0;
  std::vector<UniformitySample> samples;
  std::string failure;  // empty when passed
};

// Checks D0 < C0(h) <= 2 D0 at every sample and that C0 is strictly monotone
// toward the limit: C0(h1) > C0(h2) whenever h1 > h2. Every sample must lie
// in (0, 1/beta).
UniformityReport uniformity_check(double beta, double gamma, double kernel_bound,
                                  std::span<const double> h_samples);

}  // namespace turnpike

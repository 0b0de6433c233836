#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turnpike/types.hpp"

namespace turnpike {

enum class GradientMode { Adjoint, FiniteDifference };

struct LineSearchParams {
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;  // Armijo constant
  int max_backtracks = 60;
};

struct SolverConfig {
  int max_iterations = 5000;
  // Stopping test on ||grad||_inf / h; the division makes the threshold
  // comparable across step sizes.
  double gradient_tolerance = 1e-8;
  LineSearchParams line_search;
  int memory = 20;  // quasi-Newton history length
  GradientMode gradient_mode = GradientMode::Adjoint;
  double fd_step = 1e-6;  // central-difference step in finite-difference mode
};

struct OcpProblem {
  ModelParams params;
  TimeGrid grid;
  StateMatrix initial;

  OcpProblem(ModelParams params, TimeGrid grid, StateMatrix initial);
};

struct IterationRecord {
  int iteration;
  double objective;
  double gradient_norm;  // scaled infinity norm
  double step;
};

struct OcpSolution {
  ControlSequence controls;
  Trajectory trajectory;  // rollout of `controls` from the problem initial state
  double value;           // total cost of the pair above
  double gradient_norm;   // scaled infinity norm at the final iterate
  int iterations;
  bool converged;
  std::vector<IterationRecord> history;
};

// Objective J(u) of the transcribed problem together with dJ/du, one N x d
// block per step. Adjoint mode differentiates the Euler recursion exactly in
// one backward sweep; finite-difference mode central-differences every entry
// and is the only mode valid for the absolute kernel.
std::pair<double, std::vector<Matrix>> objective_and_gradient(
    const OcpProblem& problem, const ControlSequence& controls,
    GradientMode mode = GradientMode::Adjoint, double fd_step = 1e-6);

// Limited-memory quasi-Newton descent over the stacked controls with Armijo
// backtracking. Starts from zero controls unless a warm start is given.
OcpSolution solve_ocp(const OcpProblem& problem, const SolverConfig& config = {},
                      const ControlSequence* warm_start = nullptr);

struct DppReport {
  bool passed = false;
  int split_index = 0;
  double original_tail_cost = 0.0;
  double resolved_value = 0.0;
  double relative_gap = 0.0;   // |tail - resolved| / max(resolved, 1e-12)
  bool resolved_converged = false;
};

// Re-solves the tail problem starting from the solution's state at
// split_index and compares values; the tail of an optimal pair must be
// optimal for the tail problem. Passes when the relative gap is <= 1e-4.
DppReport dpp_check(const OcpProblem& problem, const OcpSolution& solution,
                    int split_index, const SolverConfig& config);

inline constexpr double kDppRelativeGap = 1e-4;

}  // namespace turnpike

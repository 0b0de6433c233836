#pragma once

#include "turnpike/types.hpp"

namespace turnpike {

// Ensemble norm ||x||_N = sqrt(sum_k ||x_k||^2), the Frobenius norm of the
// agent matrix. Its square is the quantity the cost terms are built from.
double ensemble_norm(const Matrix& state_or_control);

// Stage cost g(psi, u) = (1/N) (||psi - target||_N^2 + gamma ||u||_N^2).
double running_cost(const StateMatrix& state, const ControlMatrix& control,
                    const ModelParams& params);

// J = sum_{i=0}^{M-1} h g(psi^i, u^i). The terminal state does not enter.
double total_cost(const Trajectory& traj, const ControlSequence& controls,
                  const ModelParams& params);

// L_N(psi) = (1/N) ||psi - target||_N^2.
double lyapunov(const StateMatrix& state, const ModelParams& params);

// Closed-form optimizer of the steady-state problem: every row at the
// target, zero control, objective value 0.
StaticSolution solve_static(const ModelParams& params);

// Ensemble norm of the steady-state defect
//   (1/N) sum_l P(psi_k, psi_l)(psi_l - psi_k) + u_k,  k = 1..N.
// Zero exactly when (state, control) is a fixed point of the dynamics.
double static_residual(const StateMatrix& state, const ControlMatrix& control,
                       const ModelParams& params);

// max_{k,l} |P(row_k, row_l)|; the default choice for ModelParams::kernel_bound
// evaluated on the initial configuration.
double max_pairwise_kernel(const Matrix& state, const InteractionKernel& kernel);

}  // namespace turnpike

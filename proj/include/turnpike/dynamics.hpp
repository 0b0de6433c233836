#pragma once

#include "turnpike/types.hpp"

namespace turnpike {

// Pairwise attraction term: row k is (1/N) sum_l P(x_k, x_l)(x_l - x_k).
// Parallel over agents; every row accumulates its sum in index order, so the
// result is independent of the thread count and schedule.
Matrix interaction_term(const Matrix& state, const InteractionKernel& kernel);

// f(psi, u): interaction term plus the per-agent control.
Matrix drift(const StateMatrix& state, const ControlMatrix& control,
             const ModelParams& params);

// psi + h f(psi, u), h > 0.
StateMatrix euler_step(const StateMatrix& state, const ControlMatrix& control,
                       double h, const ModelParams& params);

// Iterates euler_step along the control sequence; m_steps + 1 states.
Trajectory rollout(const StateMatrix& initial, const ControlSequence& controls,
                   const ModelParams& params);

// Transpose-Jacobian product (df/dpsi)^T lambda for the backward sweep.
// Writing P = phi(||x - y||^2), row m of the result is
//   (1/N) sum_l [ 2 phi' <e, lambda_l - lambda_m> e + P (lambda_l - lambda_m) ],
// with e = x_l - x_m. Requires a differentiable kernel.
Matrix drift_state_adjoint(const Matrix& state, const Matrix& lambda,
                           const InteractionKernel& kernel);

namespace reference {

// Straight-line serial implementations kept as the baseline the parallel
// kernels are tested and benchmarked against.
Matrix interaction_term(const Matrix& state, const InteractionKernel& kernel);
Matrix drift_state_adjoint(const Matrix& state, const Matrix& lambda,
                           const InteractionKernel& kernel);

}  // namespace reference

}  // namespace turnpike

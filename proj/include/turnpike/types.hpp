#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "turnpike/errors.hpp"
#include "turnpike/kernel.hpp"

namespace turnpike {

// Agents are rows: state and control matrices are N x d. Row-major storage
// keeps one agent contiguous in memory.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct ModelParams {
  int n_agents;
  int dim;
  Vector target;    // consensus point in R^dim
  double gamma;     // control-cost weight
  InteractionKernel kernel;
  double kernel_bound;  // finite surrogate for ||P|| in the constant formulas

  ModelParams(int n_agents, int dim, Vector target, double gamma,
              InteractionKernel kernel, double kernel_bound);
};

// Uniform grid t0 < t0 + h < ... < t0 + m*h = t_final. The step count is
// recovered by rounding and must reproduce the interval to 1e-9 relative.
class TimeGrid {
 public:
  TimeGrid(double t0, double t_final, double h);
  static TimeGrid from_steps(double t0, double h, int m_steps);

  double t0() const { return t0_; }
  double t_final() const { return t_final_; }
  double h() const { return h_; }
  int m_steps() const { return m_steps_; }
  double time(int i) const { return t0_ + i * h_; }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double t0_;
  double t_final_;
  double h_;
  int m_steps_;
};

struct StateMatrix {
  Matrix values;

  StateMatrix() = default;
  explicit StateMatrix(Matrix v);  // rejects non-finite entries

  // Wraps arithmetic results without the finiteness scan. Integrators use
  // this; an exploding trajectory then carries inf/nan instead of throwing.
  static StateMatrix unchecked(Matrix v);

  static StateMatrix zero(Index n_agents, Index dim);

  Index n_agents() const { return values.rows(); }
  Index dim() const { return values.cols(); }
};

struct ControlMatrix {
  Matrix values;

  ControlMatrix() = default;
  explicit ControlMatrix(Matrix v);
  static ControlMatrix unchecked(Matrix v);
  static ControlMatrix zero(Index n_agents, Index dim);

  Index n_agents() const { return values.rows(); }
  Index dim() const { return values.cols(); }
};

// States at every grid node, m_steps + 1 entries.
struct Trajectory {
  std::vector<StateMatrix> states;
  TimeGrid grid;

  Trajectory(std::vector<StateMatrix> states, TimeGrid grid);
};

// Piecewise-constant controls, one per step, m_steps entries.
struct ControlSequence {
  std::vector<ControlMatrix> controls;
  TimeGrid grid;

  ControlSequence(std::vector<ControlMatrix> controls, TimeGrid grid);
  static ControlSequence zero(const TimeGrid& grid, Index n_agents, Index dim);
};

// Optimizer of the steady-state problem: every agent at the target, no
// control effort.
struct StaticSolution {
  StateMatrix state;
  ControlMatrix control;
};

void check_shape(const Matrix& m, const ModelParams& params, const char* what);

}  // namespace turnpike

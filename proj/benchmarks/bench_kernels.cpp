// Compares the OpenMP pairwise kernels against the serial reference across
// ensemble sizes. Run with --benchmark_time_unit=us for readable numbers.

#include <benchmark/benchmark.h>

#include "turnpike/cheap_control.hpp"
#include "turnpike/dynamics.hpp"
#include "turnpike/rng.hpp"

namespace {

using namespace turnpike;

Matrix random_state(Index n, Index d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return uniform_matrix(rng, n, d, -1.0, 1.0);
}

void BM_interaction_parallel(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix psi = random_state(n, 2, 7);
  const InteractionKernel kernel{KernelType::Quadratic};
  for (auto _ : state) {
    Matrix out = interaction_term(psi, kernel);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(n);
}

void BM_interaction_reference(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix psi = random_state(n, 2, 7);
  const InteractionKernel kernel{KernelType::Quadratic};
  for (auto _ : state) {
    Matrix out = reference::interaction_term(psi, kernel);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(n);
}

void BM_adjoint_parallel(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix psi = random_state(n, 2, 7);
  const Matrix lambda = random_state(n, 2, 11);
  const InteractionKernel kernel{KernelType::Quadratic};
  for (auto _ : state) {
    Matrix out = drift_state_adjoint(psi, lambda, kernel);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_adjoint_reference(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix psi = random_state(n, 2, 7);
  const Matrix lambda = random_state(n, 2, 11);
  const InteractionKernel kernel{KernelType::Quadratic};
  for (auto _ : state) {
    Matrix out = reference::drift_state_adjoint(psi, lambda, kernel);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_closed_loop_rollout(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix psi0 = random_state(n, 1, 3);
  const ModelParams params(static_cast<int>(n), 1, Vector::Constant(1, 0.5), 0.1,
                           InteractionKernel{KernelType::Quadratic}, 1.0);
  const TimeGrid grid(0.0, 1.0, 0.01);
  for (auto _ : state) {
    auto pair = closed_loop_rollout(StateMatrix(psi0), grid, params, 3.0);
    benchmark::DoNotOptimize(pair.first.states.data());
  }
}

BENCHMARK(BM_interaction_reference)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_interaction_parallel)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_adjoint_reference)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_adjoint_parallel)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_closed_loop_rollout)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();

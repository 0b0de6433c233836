#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turnpike/solver.hpp"
#include "turnpike/types.hpp"

namespace turnpike {

enum class RunMode { Uncontrolled, Cheap, Optimal };

std::string_view mode_name(RunMode mode);

struct InitSpec {
  std::string distribution = "uniform";
  double low = 0.0;
  double high = 1.0;
};

struct SweepSpec {
  std::string key;  // beta | h | n_agents
  std::vector<double> values;
};

struct ExperimentConfig {
  // model
  int n_agents = 0;
  int dim = 0;
  Vector target;
  double gamma = 0.1;
  KernelType kernel = KernelType::Quadratic;
  std::optional<double> kernel_bound;  // absent: max |P| over initial pairs

  // grid
  double t0 = 0.0;
  double t_final = 0.0;
  double h = 0.0;

  // run
  RunMode mode = RunMode::Uncontrolled;
  std::optional<double> beta;  // required for cheap and optimal runs
  double lambda = 0.5;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  bool per_agent = false;
  std::string warm_start;  // optional controls file for the solver
  int workers = 1;

  InitSpec init;
  std::optional<SweepSpec> sweep;
  SolverConfig solver;
  // auto: adjoint when the kernel allows it, finite differences otherwise.
  bool solver_mode_auto = true;
};

// Raw "[section] / key = value" text, newest value wins; remembers the line
// each key came from so validation can point at it.
struct ConfigMap {
  std::map<std::string, std::string> entries;  // "section.key" -> value
  std::map<std::string, int> lines;

  void set(const std::string& dotted_key, const std::string& value, int line = 0);
};

ConfigMap read_config_file(const std::string& path);
ConfigMap read_config_stream(std::istream& in, const std::string& name);

// Applies defaults and validates every field; throws ConfigError naming the
// offending key (and line when known).
ExperimentConfig build_config(const ConfigMap& map);

ExperimentConfig load_config(const std::string& path);

}  // namespace turnpike

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turnpike/analysis.hpp"
#include "turnpike/config.hpp"

namespace turnpike {

struct RunSeries {
  std::vector<double> time;          // m + 1
  std::vector<double> lyapunov;      // m + 1
  std::vector<double> running_cost;  // m
  std::vector<double> control_norm;  // m
  Matrix mean_state;                 // (m + 1) x d
};

struct RunSummary {
  double total_cost = 0.0;
  double final_lyapunov = 0.0;
  double initial_distance = 0.0;  // ||psi0 - psi_sigma||_N
  double kernel_bound = 0.0;
  double decay_rate_fit = 0.0;    // geometric per-step ratio fitted to L_N
  double decay_fit_r_squared = 0.0;
  // optimal mode only
  std::optional<double> value;
  std::optional<double> gradient_norm;
  std::optional<int> iterations;
  std::optional<bool> converged;
};

struct RunReport {
  ExperimentConfig config;
  RunSeries series;
  RunSummary summary;
  std::optional<TurnpikeCertificate> certificate;
};

// Draws the initial state for the config with its seeded generator.
StateMatrix sample_initial(const ExperimentConfig& config);

// Runs one experiment and writes series.csv, report.json and (for controlled
// modes) controls.csv into config.output_dir; per_agent additionally dumps
// states.csv. Returns the in-memory report.
RunReport run_experiment(const ExperimentConfig& config);

struct SweepRow {
  std::string key;
  double value = 0.0;
  double final_lyapunov = 0.0;
  double total_cost = 0.0;
  std::optional<double> solver_value;
  std::optional<bool> certificate_passed;
  bool failed = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::optional<RunReport>> reports;  // row order, empty on failure
};

// Runs every override (concurrently up to config.workers), each into its own
// subdirectory, and writes a side-by-side sweep.csv. Failed runs keep their
// row and do not stop the sweep.
SweepResult run_sweep(const ExperimentConfig& config);

// Controls array format shared by warm starts and solve outputs:
// header line "m,n_agents,dim", then one line per step with n*d values.
void write_controls_csv(const std::string& path, const ControlSequence& controls);
ControlSequence read_controls_csv(const std::string& path, const TimeGrid& grid);

void write_report_json(const std::string& path, const RunReport& report);
void write_series_csv(const std::string& path, const RunReport& report);

}  // namespace turnpike

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adia/instance.hpp"
#include "adia/schedule.hpp"

namespace adia {

/// One batch experiment: instance source, sweep resolution, schedule kinds
/// and epsilon list, integrator settings, output directory.  Every output
/// byte is determined by this struct (plus code version).
struct ExperimentConfig {
  // instance source: explicit costs win over noise; both carry n and marked
  int n = 4;
  std::size_t marked = 0;
  double poly_bound = 0.0;  // 0 = default n^3
  std::optional<std::vector<double>> f;
  std::optional<NoiseModel> noise;
  std::optional<std::string> instance_file;

  int grid_points = 101;  // s sweep resolution
  int k_lowest = 4;       // eigenvalue curves in spectrum outputs

  std::vector<ScheduleKind> schedules{ScheduleKind::LocalExact};
  std::vector<double> epsilons{0.1};
  int steps = 4096;
  int nodes = 1025;
  int trace_points = 257;

  int mingap_grid = 1024;
  double mingap_refine_tol = 1e-12;
  std::optional<double> g_min_override;  // skip min_gap at large N

  std::string out_dir = "out";
};

/// Strict parse: unknown fields anywhere in the config are errors.
ExperimentConfig load_config(const std::string& path);

/// Materialize the configured instance.
ProblemInstance make_instance(const ExperimentConfig& config);

// Each command writes its artifact files under config.out_dir and returns
// the list of paths written.
std::vector<std::string> cmd_spectrum(const ExperimentConfig& config);
std::vector<std::string> cmd_envelope(const ExperimentConfig& config);
std::vector<std::string> cmd_run(const ExperimentConfig& config);
std::vector<std::string> cmd_mingap(const ExperimentConfig& config);

}  // namespace adia

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adia/cli.hpp"
#include "adia/errors.hpp"

namespace {

struct FlagOverrides {
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> marked;
  std::vector<double> epsilons;
  std::vector<std::string> schedules;
  std::optional<int> steps;
  std::optional<int> nodes;
  std::optional<int> grid_points;
  std::optional<int> k_lowest;
  std::optional<double> g_min;
  std::optional<std::string> out_dir;
  std::optional<std::string> instance_file;
};

void apply(const FlagOverrides& flags, adia::ExperimentConfig& config) {
  if (flags.n) {
    config.n = *flags.n;
    config.f.reset();  // inline costs from a config no longer match
  }
  if (flags.seed) {
    if (!config.noise) {
      config.noise = adia::NoiseModel::uniform(
          1.0, std::max(2.0, static_cast<double>(config.n)), *flags.seed);
    } else {
      config.noise->seed = *flags.seed;
    }
    config.f.reset();
  }
  if (flags.marked) config.marked = *flags.marked;
  if (!flags.epsilons.empty()) config.epsilons = flags.epsilons;
  if (!flags.schedules.empty()) {
    config.schedules.clear();
    for (const auto& name : flags.schedules) {
      config.schedules.push_back(adia::parse_kind(name));
    }
  }
  if (flags.steps) config.steps = *flags.steps;
  if (flags.nodes) config.nodes = *flags.nodes;
  if (flags.grid_points) config.grid_points = *flags.grid_points;
  if (flags.k_lowest) config.k_lowest = *flags.k_lowest;
  if (flags.g_min) config.g_min_override = *flags.g_min;
  if (flags.out_dir) config.out_dir = *flags.out_dir;
  if (flags.instance_file) config.instance_file = *flags.instance_file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic search scheduling toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  FlagOverrides flags;
  app.add_option("--config", config_path, "experiment config JSON");
  app.add_option("--n", flags.n, "problem size exponent (N = 2^n)");
  app.add_option("--seed", flags.seed, "noise seed");
  app.add_option("--marked", flags.marked, "marked item index");
  app.add_option("--epsilon", flags.epsilons, "adiabaticity slack (repeatable)");
  app.add_option("--schedule", flags.schedules,
                 "schedule kind: global | local-exact | local-envelope");
  app.add_option("--steps", flags.steps, "integrator steps");
  app.add_option("--nodes", flags.nodes, "schedule table nodes");
  app.add_option("--grid-points", flags.grid_points, "s sweep grid points");
  app.add_option("--k", flags.k_lowest, "eigenvalue curves to emit");
  app.add_option("--gmin", flags.g_min, "externally supplied minimum gap");
  app.add_option("--out", flags.out_dir, "output directory");
  app.add_option("--instance", flags.instance_file, "instance JSON file");

  auto* sub_spectrum = app.add_subcommand("spectrum", "eigenvalue curves vs s");
  auto* sub_envelope =
      app.add_subcommand("envelope", "gap envelope and runtime estimates");
  auto* sub_run = app.add_subcommand("run", "schedules + dynamics + fidelity");
  auto* sub_mingap = app.add_subcommand("mingap", "minimum gap search");
  for (auto* sub : {sub_spectrum, sub_envelope, sub_run, sub_mingap}) {
    sub->fallthrough();  // accept the shared flags after the subcommand too
  }

  CLI11_PARSE(app, argc, argv);

  try {
    adia::ExperimentConfig config;
    if (!config_path.empty()) config = adia::load_config(config_path);
    apply(flags, config);

    std::vector<std::string> written;
    if (sub_spectrum->parsed()) written = adia::cmd_spectrum(config);
    if (sub_envelope->parsed()) written = adia::cmd_envelope(config);
    if (sub_run->parsed()) written = adia::cmd_run(config);
    if (sub_mingap->parsed()) written = adia::cmd_mingap(config);

    for (const auto& path : written) std::cout << path << '\n';
    return 0;
  } catch (const adia::Error& e) {
    nlohmann::json err;
    err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    std::cout << err.dump() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << err.dump() << std::endl;
    return 1;
  }
}

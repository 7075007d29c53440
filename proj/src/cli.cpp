#include "adia/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "adia/bounds.hpp"
#include "adia/csv.hpp"
#include "adia/errors.hpp"
#include "adia/evolution.hpp"
#include "adia/hamiltonian.hpp"
#include "adia/spectrum.hpp"
#include "adia/svg.hpp"

namespace adia {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end()) {
      throw IoError("unknown field '" + key + "' in " + where);
    }
  }
}

NoiseModel parse_noise(const json& j) {
  if (!j.is_object()) throw IoError("noise must be an object");
  reject_unknown(j, {"kind", "low", "high", "mean", "sigma", "values", "seed"},
                 "noise");
  if (!j.contains("kind")) throw IoError("noise needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  NoiseModel m;
  if (kind == "uniform-interval") {
    m = NoiseModel::uniform(j.value("low", 1.0), j.value("high", 2.0),
                            j.value("seed", std::uint64_t{1}));
  } else if (kind == "gaussian-clipped") {
    m = NoiseModel::gaussian(j.value("mean", 1.0), j.value("sigma", 0.5),
                             j.value("seed", std::uint64_t{1}));
  } else if (kind == "explicit-list") {
    if (!j.contains("values")) throw IoError("explicit-list noise needs values");
    m = NoiseModel::explicit_list(j["values"].get<std::vector<double>>());
  } else {
    throw IoError("unknown noise kind: " + kind);
  }
  return m;
}

std::filesystem::path out_path(const ExperimentConfig& config,
                               const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return std::filesystem::path(config.out_dir) / name;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<double> s_grid(int points) {
  if (points < 2) throw ArgumentError("grid needs at least 2 points");
  std::vector<double> s(points);
  for (int i = 0; i < points; ++i) {
    s[i] = static_cast<double>(i) / (points - 1);
  }
  return s;
}

double resolved_g_min(const ExperimentConfig& config,
                      const ProblemInstance& inst) {
  if (config.g_min_override) return *config.g_min_override;
  return min_gap(inst, config.mingap_grid, config.mingap_refine_tol).g_min;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw IoError("config must be a JSON object");
  reject_unknown(j,
                 {"instance", "grid_points", "k_lowest", "schedules",
                  "epsilons", "steps", "nodes", "trace_points", "mingap_grid",
                  "mingap_refine_tol", "g_min", "out_dir"},
                 "config");
  ExperimentConfig config;
  if (j.contains("instance")) {
    const json& inst = j["instance"];
    if (!inst.is_object()) throw IoError("instance must be an object");
    reject_unknown(inst, {"n", "marked", "f", "noise", "file", "poly_bound"},
                   "instance");
    if (inst.contains("file")) {
      config.instance_file = inst["file"].get<std::string>();
    }
    config.n = inst.value("n", config.n);
    config.marked = inst.value("marked", std::uint64_t{0});
    config.poly_bound = inst.value("poly_bound", 0.0);
    if (inst.contains("f")) config.f = inst["f"].get<std::vector<double>>();
    if (inst.contains("noise")) config.noise = parse_noise(inst["noise"]);
  }
  config.grid_points = j.value("grid_points", config.grid_points);
  config.k_lowest = j.value("k_lowest", config.k_lowest);
  if (j.contains("schedules")) {
    config.schedules.clear();
    for (const auto& name : j["schedules"]) {
      config.schedules.push_back(parse_kind(name.get<std::string>()));
    }
  }
  if (j.contains("epsilons")) {
    config.epsilons = j["epsilons"].get<std::vector<double>>();
  }
  config.steps = j.value("steps", config.steps);
  config.nodes = j.value("nodes", config.nodes);
  config.trace_points = j.value("trace_points", config.trace_points);
  config.mingap_grid = j.value("mingap_grid", config.mingap_grid);
  config.mingap_refine_tol =
      j.value("mingap_refine_tol", config.mingap_refine_tol);
  if (j.contains("g_min")) config.g_min_override = j["g_min"].get<double>();
  config.out_dir = j.value("out_dir", config.out_dir);
  return config;
}

ProblemInstance make_instance(const ExperimentConfig& config) {
  if (config.instance_file) {
    return load_instance_json(*config.instance_file);
  }
  if (config.f) {
    return ProblemInstance(config.n, *config.f, config.marked,
                           config.poly_bound);
  }
  if (config.noise) {
    return perturb(config.n, config.marked, *config.noise, config.poly_bound);
  }
  // default playground: uniform costs in [1, max(2, n)]
  const double high = std::max(2.0, static_cast<double>(config.n));
  return perturb(config.n, config.marked, NoiseModel::uniform(1.0, high, 1),
                 config.poly_bound);
}

std::vector<std::string> cmd_spectrum(const ExperimentConfig& config) {
  const ProblemInstance inst = make_instance(config);
  const auto grid = s_grid(config.grid_points);
  const auto samples = sweep(inst, grid);
  const std::size_t k =
      std::min<std::size_t>(std::max(config.k_lowest, 2), inst.size());

  const auto csv_path = out_path(config, "spectrum.csv");
  CsvWriter csv(csv_path.string());
  std::vector<std::string> names{"s"};
  for (std::size_t c = 0; c < k; ++c) names.push_back("lambda_" + std::to_string(c));
  names.push_back("gap");
  csv.header(names);
  for (const auto& sample : samples) {
    std::vector<double> row{sample.s};
    for (std::size_t c = 0; c < k; ++c) row.push_back(sample.eigenvalues[c]);
    row.push_back(sample.eigenvalues[1] - sample.eigenvalues[0]);
    csv.row(row);
  }
  csv.close();

  LineChart chart("Lowest eigenvalue curves (N = " + std::to_string(inst.size()) +
                      ")",
                  "s", "eigenvalue");
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> ys;
    ys.reserve(samples.size());
    for (const auto& sample : samples) ys.push_back(sample.eigenvalues[c]);
    chart.add_series("lambda_" + std::to_string(c), grid, ys);
  }
  const auto svg_path = out_path(config, "spectrum.svg");
  chart.write(svg_path.string());
  return {csv_path.string(), svg_path.string()};
}

std::vector<std::string> cmd_envelope(const ExperimentConfig& config) {
  const ProblemInstance inst = make_instance(config);
  const double g_min = resolved_g_min(config, inst);
  const RuntimeEstimate est = runtime_estimate(inst, g_min);
  const GapEnvelope& env = est.env;

  const auto grid = s_grid(config.grid_points);
  std::vector<double> exact(grid.size()), bound(grid.size());
  const std::ptrdiff_t gp = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < gp; ++i) {
    exact[i] = gap(inst, grid[i]);
    bound[i] = env(grid[i]);
  }

  const auto csv_path = out_path(config, "envelope.csv");
  CsvWriter csv(csv_path.string());
  const std::string names[] = {"s", "envelope", "exact_gap"};
  csv.header(names);
  int violations = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (bound[i] > exact[i] + 1e-9) ++violations;
    const double row[] = {grid[i], bound[i], exact[i]};
    csv.row(row);
  }
  csv.close();
  if (violations > 0) {
    std::cerr << "envelope exceeds the exact gap at " << violations << " of "
              << grid.size() << " sampled points\n";
  }

  json summary;
  summary["m"] = env.m;
  summary["g_min"] = env.g_min;
  summary["a"] = env.a;
  summary["b"] = env.b;
  summary["T_closed_form"] = est.closed_form;
  summary["T_integral"] = est.integral;
  const auto json_path = out_path(config, "envelope.json");
  write_json_file(summary, json_path);

  LineChart chart("Spectral gap vs piecewise-linear envelope", "s", "gap");
  chart.add_series("exact gap", grid, exact);
  chart.add_series("envelope", grid, bound);
  chart.add_vline(env.a, "a");
  chart.add_vline(env.b, "b");
  const auto svg_path = out_path(config, "envelope.svg");
  chart.write(svg_path.string());
  return {csv_path.string(), json_path.string(), svg_path.string()};
}

std::vector<std::string> cmd_run(const ExperimentConfig& config) {
  const ProblemInstance inst = make_instance(config);
  std::vector<std::string> written;

  const bool needs_g_min =
      std::any_of(config.schedules.begin(), config.schedules.end(),
                  [](ScheduleKind k) { return k != ScheduleKind::LocalExact; });
  double g_min = 0.0;
  if (needs_g_min) g_min = resolved_g_min(config, inst);

  json results = json::array();
  for (ScheduleKind kind : config.schedules) {
    for (double eps : config.epsilons) {
      Schedule sched = [&] {
        switch (kind) {
          case ScheduleKind::Global:
            return global_schedule(inst, eps, g_min);
          case ScheduleKind::LocalEnvelope:
            return local_schedule(inst,
                                  envelope_gap_model(envelope(inst, g_min)),
                                  eps, config.nodes);
          case ScheduleKind::LocalExact:
          default:
            return local_schedule(inst, exact_gap_model(inst), eps,
                                  config.nodes);
        }
      }();

      const std::string tag = kind_name(kind) + "_eps" + format_double(eps);
      const auto sched_path = out_path(config, "schedule_" + tag + ".csv");
      {
        CsvWriter csv(sched_path.string());
        csv.comment("kind=" + kind_name(kind) + ",epsilon=" +
                    format_double(eps) + ",T=" + format_double(sched.T) +
                    ",D=" + format_double(sched.D));
        const std::string names[] = {"t", "s", "g_model"};
        csv.header(names);
        for (std::size_t i = 0; i < sched.t.size(); ++i) {
          const double row[] = {sched.t[i], sched.s[i], sched.g[i]};
          csv.row(row);
        }
        csv.close();
      }
      written.push_back(sched_path.string());

      const EvolveResult res =
          evolve(inst, sched, config.steps, config.trace_points);
      const auto trace_path = out_path(config, "trace_" + tag + ".csv");
      {
        CsvWriter csv(trace_path.string());
        const std::string names[] = {"t", "s", "ground_overlap", "norm_drift"};
        csv.header(names);
        for (std::size_t i = 0; i < res.trace.t.size(); ++i) {
          const double row[] = {res.trace.t[i], res.trace.s[i],
                                res.trace.ground_overlap[i],
                                res.trace.norm_drift[i]};
          csv.row(row);
        }
        csv.close();
      }
      written.push_back(trace_path.string());

      json row;
      row["kind"] = kind_name(kind);
      row["epsilon"] = eps;
      row["T"] = sched.T;
      row["fidelity"] = fidelity(res.state, inst);
      results.push_back(row);
    }
  }
  const auto results_path = out_path(config, "results.json");
  write_json_file(results, results_path);
  written.push_back(results_path.string());
  return written;
}

std::vector<std::string> cmd_mingap(const ExperimentConfig& config) {
  const ProblemInstance inst = make_instance(config);
  const MinGapResult res =
      min_gap(inst, config.mingap_grid, config.mingap_refine_tol);

  // Early-s probe: the gap at s0 = 1/p for a polynomial p(n) > f_max stays
  // close to its initial value 1; reported as a diagnostic only.
  const double p = std::ceil(inst.f_max()) + 1.0;
  const double s0 = 1.0 / p;
  const auto [l0, l1] = lowest_two(inst, s0);

  json j;
  j["s_star"] = res.s_star;
  j["g_min"] = res.g_min;
  j["grid_points"] = config.mingap_grid;
  j["refine_tol"] = config.mingap_refine_tol;
  j["s0_probe"] = {{"p", p},
                   {"s0", s0},
                   {"gap", l1 - l0},
                   {"lambda_0", l0},
                   {"lambda_1", l1}};
  const auto path = out_path(config, "mingap.json");
  write_json_file(j, path);
  return {path.string()};
}

}  // namespace adia

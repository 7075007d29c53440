#include "adia/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "adia/errors.hpp"

namespace adia {

namespace {

// Uniform double in [0, 1) with exactly 53 random bits, so results do not
// depend on the standard library's distribution implementation.
double u53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double low, double high) {
  return low + (high - low) * u53(rng);
}

// Box-Muller; consumes two draws per normal deviate.
double normal(std::mt19937_64& rng, double mean, double sigma) {
  double u1 = u53(rng);
  double u2 = u53(rng);
  while (u1 <= 0.0) u1 = u53(rng);  // guard log(0)
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
}

CanonicalOrder build_canonical(const std::vector<double>& f, std::size_t marked) {
  CanonicalOrder canon;
  const std::size_t big_n = f.size();
  canon.perm.reserve(big_n - 1);
  for (std::size_t k = 0; k < big_n; ++k) {
    if (k != marked) canon.perm.push_back(k);
  }
  std::stable_sort(canon.perm.begin(), canon.perm.end(),
                   [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  canon.values.reserve(big_n - 1);
  for (std::size_t idx : canon.perm) canon.values.push_back(f[idx]);

  // Tie groups over the sorted values; chained comparison so a run of
  // near-equal values lands in one group.
  std::size_t i = 0;
  while (i < canon.values.size()) {
    std::size_t j = i + 1;
    while (j < canon.values.size() &&
           canon.values[j] - canon.values[j - 1] <=
               ProblemInstance::kTieTol * std::max(1.0, canon.values[j])) {
      ++j;
    }
    if (j - i >= 2) {
      TieGroup g;
      g.value = canon.values[i];
      for (std::size_t r = i; r < j; ++r) g.indices.push_back(canon.perm[r]);
      canon.ties.push_back(std::move(g));
    }
    i = j;
  }
  return canon;
}

}  // namespace

ProblemInstance::ProblemInstance(int n, std::vector<double> f, std::size_t marked,
                                 double poly_bound)
    : n_(n), marked_(marked), f_(std::move(f)) {
  if (n < 1 || n > 26) {
    throw DimensionError("n must be in [1, 26], got " + std::to_string(n));
  }
  const std::size_t big_n = std::size_t{1} << n;
  if (f_.size() != big_n) {
    throw DimensionError("cost vector has " + std::to_string(f_.size()) +
                         " entries, expected 2^" + std::to_string(n) + " = " +
                         std::to_string(big_n));
  }
  if (marked >= big_n) {
    throw DimensionError("marked index " + std::to_string(marked) +
                         " out of range for N = " + std::to_string(big_n));
  }
  poly_bound_ = poly_bound > 0.0 ? poly_bound
                                 : static_cast<double>(n) * n * n;
  if (f_[marked_] != 0.0) {
    throw MarkedValueError("marked cost must be exactly zero, got " +
                           std::to_string(f_[marked_]));
  }
  f_max_ = 0.0;
  for (std::size_t k = 0; k < big_n; ++k) {
    if (k == marked_) continue;
    if (!(f_[k] > 0.0)) {
      throw NegativeEntryError("cost at index " + std::to_string(k) +
                               " must be positive, got " + std::to_string(f_[k]));
    }
    if (f_[k] > poly_bound_) {
      throw BoundError("cost at index " + std::to_string(k) + " exceeds bound " +
                       std::to_string(poly_bound_));
    }
    f_max_ = std::max(f_max_, f_[k]);
  }
  canon_ = build_canonical(f_, marked_);
}

NoiseModel NoiseModel::uniform(double low, double high, std::uint64_t seed) {
  NoiseModel m;
  m.kind = Kind::UniformInterval;
  m.low = low;
  m.high = high;
  m.seed = seed;
  return m;
}

NoiseModel NoiseModel::gaussian(double mean, double sigma, std::uint64_t seed) {
  NoiseModel m;
  m.kind = Kind::GaussianClipped;
  m.mean = mean;
  m.sigma = sigma;
  m.seed = seed;
  return m;
}

NoiseModel NoiseModel::explicit_list(std::vector<double> values) {
  NoiseModel m;
  m.kind = Kind::ExplicitList;
  m.values = std::move(values);
  return m;
}

ProblemInstance perturb(int n, std::size_t marked, const NoiseModel& model,
                        double poly_bound) {
  if (n < 1 || n > 26) {
    throw DimensionError("n must be in [1, 26], got " + std::to_string(n));
  }
  const std::size_t big_n = std::size_t{1} << n;
  const double bound = poly_bound > 0.0 ? poly_bound
                                        : static_cast<double>(n) * n * n;
  std::vector<double> f(big_n, 0.0);

  switch (model.kind) {
    case NoiseModel::Kind::UniformInterval: {
      if (!(model.low > 0.0) || !(model.high >= model.low)) {
        throw NoiseRangeError("uniform interval requires 0 < low <= high");
      }
      if (model.high > bound) {
        throw NoiseRangeError("uniform interval exceeds cost bound " +
                              std::to_string(bound));
      }
      std::mt19937_64 rng(model.seed);
      for (std::size_t k = 0; k < big_n; ++k) {
        if (k == marked) continue;
        f[k] = uniform_in(rng, model.low, model.high);
      }
      break;
    }
    case NoiseModel::Kind::GaussianClipped: {
      if (!(model.sigma > 0.0) || !std::isfinite(model.mean)) {
        throw NoiseRangeError("gaussian noise requires finite mean and sigma > 0");
      }
      // Rejection keeps draws inside (0, bound]; the acceptance region must
      // carry noticeable mass or generation would stall.
      if (model.mean + 8.0 * model.sigma <= 0.0 ||
          model.mean - 8.0 * model.sigma > bound) {
        throw NoiseRangeError("gaussian noise mass lies outside (0, bound]");
      }
      std::mt19937_64 rng(model.seed);
      for (std::size_t k = 0; k < big_n; ++k) {
        if (k == marked) continue;
        double v = normal(rng, model.mean, model.sigma);
        int tries = 0;
        while (!(v > 0.0) || v > bound) {
          v = normal(rng, model.mean, model.sigma);
          if (++tries > 10000) {
            throw NoiseRangeError("gaussian rejection sampling stalled");
          }
        }
        f[k] = v;
      }
      break;
    }
    case NoiseModel::Kind::ExplicitList: {
      if (model.values.size() != big_n - 1) {
        throw DimensionError("explicit noise list has " +
                             std::to_string(model.values.size()) +
                             " entries, expected " + std::to_string(big_n - 1));
      }
      std::size_t i = 0;
      for (std::size_t k = 0; k < big_n; ++k) {
        if (k == marked) continue;
        f[k] = model.values[i++];
      }
      break;
    }
  }
  return ProblemInstance(n, std::move(f), marked, bound);
}

ProblemInstance unperturbed_instance(int n, std::size_t marked) {
  const std::size_t big_n = std::size_t{1} << n;
  std::vector<double> f(big_n, 1.0);
  f[marked] = 0.0;
  return ProblemInstance(n, std::move(f), marked);
}

ProblemInstance load_instance_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("instance file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw IoError("instance file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "marked" && key != "f") {
      throw IoError("unknown field '" + key + "' in instance file " + path);
    }
  }
  if (!j.contains("n") || !j.contains("marked") || !j.contains("f")) {
    throw IoError("instance file must contain fields n, marked, f");
  }
  if (!j["n"].is_number_integer() || !j["marked"].is_number_integer() ||
      !j["f"].is_array()) {
    throw IoError("instance fields have wrong types (n:int, marked:int, f:array)");
  }
  const int n = j["n"].get<int>();
  const auto marked_raw = j["marked"].get<long long>();
  if (marked_raw < 0) throw DimensionError("marked index must be non-negative");
  std::vector<double> f;
  f.reserve(j["f"].size());
  for (const auto& v : j["f"]) {
    if (!v.is_number()) throw IoError("cost vector entries must be numbers");
    f.push_back(v.get<double>());
  }
  return ProblemInstance(n, std::move(f), static_cast<std::size_t>(marked_raw));
}

void save_instance_json(const ProblemInstance& inst, const std::string& path) {
  nlohmann::json j;
  j["n"] = inst.n();
  j["marked"] = inst.marked();
  j["f"] = inst.f();
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for instance file: " + path);
}

}  // namespace adia

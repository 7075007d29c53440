#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace adia {

/// Group of entries whose costs coincide within the tie tolerance.
struct TieGroup {
  std::vector<std::size_t> indices;  // original positions, ascending
  double value;                      // representative (first member's) cost
};

/// Non-marked costs sorted ascending, with provenance back to the original
/// index order and the tie structure used by the deflated eigensolver.
struct CanonicalOrder {
  std::vector<double> values;       // z_1 <= z_2 <= ... (size N-1)
  std::vector<std::size_t> perm;    // perm[i] = original index of values[i]
  std::vector<TieGroup> ties;       // only groups with >= 2 members

  bool has_ties() const { return !ties.empty(); }
};

/// Search instance: N = 2^n items, one marked item with cost exactly zero,
/// every other cost strictly positive and at most poly_bound.
///
/// Two costs are treated as tied when |f_i - f_j| <= 1e-12 * max(1, f_i);
/// the tolerance is absolute below 1 and relative above to keep tie
/// detection meaningful across the whole admissible cost range.
class ProblemInstance {
 public:
  static constexpr double kTieTol = 1e-12;

  ProblemInstance(int n, std::vector<double> f, std::size_t marked,
                  double poly_bound = 0.0);  // 0 = default n^3

  int n() const { return n_; }
  std::size_t size() const { return f_.size(); }
  std::size_t marked() const { return marked_; }
  double poly_bound() const { return poly_bound_; }
  const std::vector<double>& f() const { return f_; }
  double f_max() const { return f_max_; }

  /// Sorted view of the non-marked costs; computed once at construction.
  const CanonicalOrder& canonical() const { return canon_; }

  /// Smallest non-marked cost f(z_1).
  double f_z1() const { return canon_.values.front(); }

 private:
  int n_;
  std::size_t marked_;
  double poly_bound_;
  double f_max_;
  std::vector<double> f_;
  CanonicalOrder canon_;
};

/// Cost perturbation model applied on top of the all-equal baseline.
struct NoiseModel {
  enum class Kind { UniformInterval, GaussianClipped, ExplicitList };

  Kind kind = Kind::UniformInterval;
  double low = 1.0;            // uniform-interval support
  double high = 2.0;
  double mean = 1.0;           // gaussian-clipped parameters
  double sigma = 0.5;
  std::vector<double> values;  // explicit list, one cost per non-marked item
  std::uint64_t seed = 1;

  static NoiseModel uniform(double low, double high, std::uint64_t seed);
  static NoiseModel gaussian(double mean, double sigma, std::uint64_t seed);
  static NoiseModel explicit_list(std::vector<double> values);
};

/// Build an instance whose non-marked costs are drawn from `model`.
/// Draws are assigned in increasing index order (skipping `marked`), so a
/// fixed seed reproduces the same instance bit for bit.
ProblemInstance perturb(int n, std::size_t marked, const NoiseModel& model,
                        double poly_bound = 0.0);

/// All non-marked costs equal to one (the analytically solvable baseline).
ProblemInstance unperturbed_instance(int n, std::size_t marked = 0);

/// JSON file format: {"n": int, "marked": int, "f": [numbers]}.
/// Unknown fields are rejected, not ignored.
ProblemInstance load_instance_json(const std::string& path);
void save_instance_json(const ProblemInstance& inst, const std::string& path);

}  // namespace adia

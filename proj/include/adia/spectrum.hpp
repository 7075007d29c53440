#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "adia/instance.hpp"

namespace adia {

/// Full spectrum of H(s) at one s, with the bracketing interval and secular
/// residual for each eigenvalue.  Eigenvalues obtained by deflation of a tie
/// group carry copy_rank >= 1 and a zero residual; their interval degenerates
/// to the pole itself.
struct SpectrumSample {
  double s = 0.0;
  std::vector<double> eigenvalues;                   // ascending, size N
  std::vector<std::pair<double, double>> intervals;  // open bracket per value
  std::vector<double> residuals;                     // |w(lambda)| per value
  std::vector<std::int32_t> pole_index;              // owning pole group, -1 none
  std::vector<std::int32_t> copy_rank;               // 0 = secular root

  // Pole system the sample was solved against: distinct diagonal values of
  // H(s) in ascending order and, per pole, the original item indices tied at
  // that value.  Retained so eigenvectors can be reconstructed later.
  std::vector<double> poles;
  std::vector<std::vector<std::uint32_t>> pole_members;
};

/// Value of the rational secular function
///   w(lambda) = 1 - ((1-s)/N) sum_k 1/(d_k(s) - lambda),
/// whose roots between consecutive poles are the non-deflated eigenvalues.
/// Throws PoleProximityError when lambda sits within 1e-14 * scale of a pole.
double secular_eval(const ProblemInstance& inst, double s, double lambda);

/// Characteristic polynomial value in sign / log-magnitude form, evaluated
/// from its three-term product expansion (not via secular_eval, so the two
/// routes cross-check each other).  sign == 0 encodes an exact zero.
struct CharPolyValue {
  int sign;
  double log_magnitude;
};
CharPolyValue char_poly_eval(const ProblemInstance& inst, double s, double lambda);

/// All N eigenvalues of H(s).  0 <= s <= 1; the s = 0 and s = 1 endpoints
/// are returned exactly.  Parallel over secular intervals at large N.
SpectrumSample eigenvalues(const ProblemInstance& inst, double s);

/// Two smallest eigenvalues only; O(poles) per secular iteration.
std::pair<double, double> lowest_two(const ProblemInstance& inst, double s);

/// Spectral gap lambda_1(s) - lambda_0(s).
double gap(const ProblemInstance& inst, double s);

/// Eigenvector for eigenvalues[which] of a solved sample, in the original
/// index basis, unit norm.  Secular roots give v_k proportional to
/// 1/(d_k - lambda); deflated copies give sum-zero vectors on the tie group.
std::vector<double> eigenvector(const ProblemInstance& inst,
                                const SpectrumSample& sample, std::size_t which);

/// Ground state of H(s) without solving the full spectrum.
std::vector<double> ground_state(const ProblemInstance& inst, double s);

/// Spectra over a grid of s values; parallel over grid points.
std::vector<SpectrumSample> sweep(const ProblemInstance& inst,
                                  const std::vector<double>& s_values);

/// Memoizing wrapper around gap(); safe for concurrent callers.
class GapFunction {
 public:
  explicit GapFunction(ProblemInstance inst);

  double operator()(double s) const;
  const ProblemInstance& instance() const { return inst_; }

 private:
  ProblemInstance inst_;
  mutable std::shared_mutex mu_;
  mutable std::map<double, double> cache_;
};

/// Minimum spectral gap over [0, 1]: coarse grid scan, then golden-section
/// refinement of every near-minimal grid valley.
struct MinGapResult {
  double s_star;
  double g_min;
};
MinGapResult min_gap(const ProblemInstance& inst, int grid_points = 1024,
                     double refine_tol = 1e-12);

// Serial reference implementations with identical per-item arithmetic; the
// parallel kernels above are tested for exact agreement against these.
namespace ref {
SpectrumSample eigenvalues(const ProblemInstance& inst, double s);
std::vector<SpectrumSample> sweep(const ProblemInstance& inst,
                                  const std::vector<double>& s_values);
MinGapResult min_gap(const ProblemInstance& inst, int grid_points = 1024,
                     double refine_tol = 1e-12);
}  // namespace ref

}  // namespace adia

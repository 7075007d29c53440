#pragma once

// Shared test helpers: an independent dense eigensolver oracle and
// deterministic instance generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "adia/hamiltonian.hpp"
#include "adia/instance.hpp"

namespace testutil {

/// Full spectrum of H(s) via Eigen's dense symmetric eigensolver; the
/// independent route the structured solver is checked against.
inline std::vector<double> dense_eigenvalues(const adia::ProblemInstance& inst,
                                             double s) {
  const adia::StructuredHamiltonian h(inst);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.dense(s),
                                                    Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

inline double u53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random instance with all-distinct costs in [lo, hi].
inline adia::ProblemInstance random_instance(int n, std::uint64_t seed,
                                             double lo = 0.5, double hi = 0.0) {
  if (hi <= lo) hi = lo + std::max(1.0, static_cast<double>(n));
  const std::size_t big_n = std::size_t{1} << n;
  std::mt19937_64 rng(seed);
  const std::size_t marked = rng() % big_n;
  std::vector<double> f(big_n);
  for (std::size_t k = 0; k < big_n; ++k) {
    f[k] = lo + (hi - lo) * u53(rng);
  }
  f[marked] = 0.0;
  return adia::ProblemInstance(n, std::move(f), marked);
}

/// Clustered instance in the single-wide-gap regime: f(z_1) in [1, 1.5] and
/// all later costs within a band narrower than the n/N gap threshold, so
/// classify_q returns 1 and the slope bound applies.
inline adia::ProblemInstance clustered_instance(int n, std::uint64_t seed) {
  const std::size_t big_n = std::size_t{1} << n;
  std::mt19937_64 rng(seed);
  const std::size_t marked = rng() % big_n;
  const double base = 1.0 + 0.5 * u53(rng);
  // consecutive gaps strictly below threshold but above the tie tolerance
  const double width = 0.5 * static_cast<double>(n) / static_cast<double>(big_n);
  std::vector<double> offsets(big_n - 1);
  for (auto& o : offsets) o = width * u53(rng);
  std::sort(offsets.begin(), offsets.end());
  std::vector<double> f(big_n);
  std::size_t i = 0;
  for (std::size_t k = 0; k < big_n; ++k) {
    if (k == marked) {
      f[k] = 0.0;
    } else {
      f[k] = base + offsets[i++];
    }
  }
  return adia::ProblemInstance(n, std::move(f), marked);
}

}  // namespace testutil

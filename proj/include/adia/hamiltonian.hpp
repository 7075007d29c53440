#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "adia/instance.hpp"

namespace adia {

/// Interpolating operator H(s) = (1-s) (I - J/N) + s diag(f), kept in the
/// structured form H(s) = diag(d(s)) - ((1-s)/N) J with
/// d_k(s) = 1 - s + s f_k, so a matrix-vector product costs O(N).
class StructuredHamiltonian {
 public:
  explicit StructuredHamiltonian(ProblemInstance inst);

  const ProblemInstance& instance() const { return inst_; }
  std::size_t size() const { return inst_.size(); }

  double diagonal(double s, std::size_t k) const {
    return 1.0 - s + s * inst_.f()[k];
  }

  /// Coefficient of the rank-one term: H(s) = diag(d) + rank_one_coeff * J.
  double rank_one_coeff(double s) const {
    return -(1.0 - s) / static_cast<double>(inst_.size());
  }

  /// out = H(s) v for real v.  out may not alias v.
  void apply(double s, std::span<const double> v, std::span<double> out) const;

  /// out = H(s) v for complex v.  out may not alias v.
  void apply(double s, std::span<const std::complex<double>> v,
             std::span<std::complex<double>> out) const;

  /// Explicit dense matrix, for oracle checks and small-N diagnostics.
  /// Guarded at N <= 4096.
  Eigen::MatrixXd dense(double s) const;

 private:
  ProblemInstance inst_;
};

/// Spectral norm of dH/ds = H(1) - H(0) and how it was obtained: an exact
/// dense eigensolve at desk scale, a diagonal-dominance upper bound beyond.
struct DhdsNorm {
  enum class Method { DenseEigensolve, UpperBound };
  double value;
  Method method;
};

DhdsNorm dhds_spectral_norm(const ProblemInstance& inst);

/// Right-hand side of the eigenvalue displacement inequality for a step of
/// size ds: ||H(s+ds) - H(s)||_F^2, which is ds^2 times a fixed quadratic in
/// the costs.  Valid for any s since the difference does not depend on s.
double wht_rhs(const ProblemInstance& inst, double ds);

}  // namespace adia

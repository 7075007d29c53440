#include "adia/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "adia/errors.hpp"
#include "adia/parallel.hpp"

namespace adia {

namespace {
constexpr std::size_t kDenseGuard = 4096;
}

StructuredHamiltonian::StructuredHamiltonian(ProblemInstance inst)
    : inst_(std::move(inst)) {}

void StructuredHamiltonian::apply(double s, std::span<const double> v,
                                  std::span<double> out) const {
  const std::size_t big_n = inst_.size();
  if (v.size() != big_n || out.size() != big_n) {
    throw DimensionError("apply: vector length mismatch");
  }
  const double* f = inst_.f().data();
  double sum = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(big_n);
#pragma omp parallel for reduction(+ : sum) if (big_n >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) sum += v[k];
  const double shift = rank_one_coeff(s) * sum;
#pragma omp parallel for if (big_n >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[k] = (1.0 - s + s * f[k]) * v[k] + shift;
  }
}

void StructuredHamiltonian::apply(double s, std::span<const std::complex<double>> v,
                                  std::span<std::complex<double>> out) const {
  const std::size_t big_n = inst_.size();
  if (v.size() != big_n || out.size() != big_n) {
    throw DimensionError("apply: vector length mismatch");
  }
  const double* f = inst_.f().data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(big_n);
  double sum_re = 0.0, sum_im = 0.0;
#pragma omp parallel for reduction(+ : sum_re, sum_im) if (big_n >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    sum_re += v[k].real();
    sum_im += v[k].imag();
  }
  const double c = rank_one_coeff(s);
  const std::complex<double> shift(c * sum_re, c * sum_im);
#pragma omp parallel for if (big_n >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[k] = (1.0 - s + s * f[k]) * v[k] + shift;
  }
}

Eigen::MatrixXd StructuredHamiltonian::dense(double s) const {
  const std::size_t big_n = inst_.size();
  if (big_n > kDenseGuard) {
    throw SizeGuardError("dense form requested for N = " + std::to_string(big_n) +
                         " (guard is " + std::to_string(kDenseGuard) + ")");
  }
  const auto ni = static_cast<Eigen::Index>(big_n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Constant(ni, ni, rank_one_coeff(s));
  for (Eigen::Index k = 0; k < ni; ++k) {
    h(k, k) += diagonal(s, static_cast<std::size_t>(k));
  }
  return h;
}

DhdsNorm dhds_spectral_norm(const ProblemInstance& inst) {
  const std::size_t big_n = inst.size();
  if (big_n <= kDenseGuard) {
    // dH/ds = diag(f) - I + J/N, symmetric; exact norm from its spectrum.
    const auto ni = static_cast<Eigen::Index>(big_n);
    Eigen::MatrixXd m =
        Eigen::MatrixXd::Constant(ni, ni, 1.0 / static_cast<double>(big_n));
    for (Eigen::Index k = 0; k < ni; ++k) {
      m(k, k) += inst.f()[static_cast<std::size_t>(k)] - 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const double lo = std::abs(es.eigenvalues()(0));
    const double hi = std::abs(es.eigenvalues()(ni - 1));
    return {std::max(lo, hi), DhdsNorm::Method::DenseEigensolve};
  }
  // ||diag(f) - I|| + ||J/N|| = max_k |f_k - 1| + 1.
  double worst = 1.0;  // marked entry contributes |0 - 1|
  for (std::size_t k = 0; k < big_n; ++k) {
    if (k == inst.marked()) continue;
    worst = std::max(worst, std::abs(inst.f()[k] - 1.0));
  }
  return {worst + 1.0, DhdsNorm::Method::UpperBound};
}

double wht_rhs(const ProblemInstance& inst, double ds) {
  // ||H(s+ds) - H(s)||_F^2 = ds^2 [ ((N-1)/N)^2 + (N-1)/N
  //                                 + sum_{k != marked} (f_k - (N-1)/N)^2 ].
  // First term: marked diagonal entry; second: the N(N-1) off-diagonal
  // entries of J/N; third: non-marked diagonal entries.
  const double big_n = static_cast<double>(inst.size());
  const double r = (big_n - 1.0) / big_n;
  double sum = r * r + r;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    if (k == inst.marked()) continue;
    const double t = inst.f()[k] - r;
    sum += t * t;
  }
  return ds * ds * sum;
}

}  // namespace adia

#include "adia/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adia/errors.hpp"
#include "adia/hamiltonian.hpp"
#include "adia/quadrature.hpp"
#include "adia/spectrum.hpp"

namespace adia {

WhtReport wht_check(const ProblemInstance& inst, double s, double ds) {
  if (!(ds > 0.0)) throw ArgumentError("wht_check requires ds > 0");
  if (!(s >= 0.0) || s + ds > 1.0) {
    throw ArgumentError("wht_check requires 0 <= s and s + ds <= 1");
  }
  const auto before = eigenvalues(inst, s);
  const auto after = eigenvalues(inst, s + ds);
  double lhs = 0.0;
  for (std::size_t k = 0; k < before.eigenvalues.size(); ++k) {
    const double d = after.eigenvalues[k] - before.eigenvalues[k];
    lhs += d * d;
  }
  const double rhs = wht_rhs(inst, ds);
  return {lhs, rhs, lhs <= rhs + 1e-12};
}

double slope_bound_m(const ProblemInstance& inst) {
  const auto& z = inst.canonical().values;
  if (!(z.front() >= 1.0)) {
    throw UnsupportedRegimeError(
        "slope bound requires the smallest non-marked cost >= 1, got " +
        std::to_string(z.front()));
  }
  const std::size_t count = z.size();  // N - 1 values z_1 .. z_{N-1}
  double mid_sum = 0.0;                // sum over z_1 .. z_{N-2}
  for (std::size_t i = 0; i + 1 < count; ++i) mid_sum += z[i];
  const double big_n = static_cast<double>(inst.size());
  const double top = z.back() - 1.0;
  const double arg =
      top * top + 2.0 * inst.n() + (2.0 / big_n) * mid_sum - 1.0;
  // arg >= 2n - 1 > 0 whenever the preconditions hold
  return std::sqrt(arg);
}

int classify_q(const ProblemInstance& inst, double width_threshold) {
  const auto& z = inst.canonical().values;
  const double threshold =
      width_threshold > 0.0
          ? width_threshold
          : static_cast<double>(inst.n()) / static_cast<double>(inst.size());
  int q = 0;
  double prev = 0.0;  // f(z_0) = 0 for the marked item
  for (double v : z) {
    if (v - prev >= threshold) ++q;
    prev = v;
  }
  return q;
}

double GapEnvelope::operator()(double s) const {
  double v;
  if (s <= a) {
    v = 1.0 - (m + 1.0) * s;
  } else if (s < b) {
    v = g_min;
  } else {
    v = (m + 1.0) * (s - 1.0) + f_z1;
  }
  return std::max(v, 0.0);
}

GapEnvelope envelope(const ProblemInstance& inst, double g_min) {
  if (!(g_min > 0.0 && g_min < 1.0)) {
    throw ArgumentError("envelope requires 0 < g_min < 1");
  }
  const double f_z1 = inst.f_z1();
  if (!(g_min < f_z1)) {
    throw ArgumentError("envelope requires g_min < f(z_1)");
  }
  const double m = slope_bound_m(inst);
  const double a = (1.0 - g_min) / (m + 1.0);
  const double b = (m + 1.0 - f_z1 + g_min) / (m + 1.0);
  if (!(b > a)) {
    throw DegenerateEnvelopeError(
        "envelope plateau is empty: b = " + std::to_string(b) +
        " <= a = " + std::to_string(a));
  }
  return {m, g_min, a, b, f_z1};
}

RuntimeEstimate runtime_estimate(const ProblemInstance& inst, double g_min) {
  const GapEnvelope env = envelope(inst, g_min);
  const double big_d = dhds_spectral_norm(inst).value;
  const double closed =
      big_d * (env.m - env.f_z1) / ((env.m + 1.0) * g_min * g_min);

  auto inv_sq = [&env](double s) {
    const double g = env(s);
    return 1.0 / (g * g);
  };
  // plateau handled exactly; adaptive quadrature on the two linear flanks
  const double flank1 = integrate(inv_sq, 0.0, env.a, 1e-10).value;
  const double flank3 = integrate(inv_sq, env.b, 1.0, 1e-10).value;
  const double plateau = (env.b - env.a) / (g_min * g_min);
  const double integral = big_d * (flank1 + plateau + flank3);
  return {closed, integral, big_d, env};
}

}  // namespace adia

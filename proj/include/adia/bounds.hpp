#pragma once

#include <array>

#include "adia/instance.hpp"

namespace adia {

/// Eigenvalue displacement check between s and s + ds: the summed squared
/// eigenvalue moves must stay below the squared Frobenius norm of the
/// perturbation step.
struct WhtReport {
  double lhs;
  double rhs;
  bool holds;
};
WhtReport wht_check(const ProblemInstance& inst, double s, double ds);

/// Bound m on the two lowest eigenvalue slopes,
///   m = sqrt((f(z_{N-1}) - 1)^2 + 2n + (2/N) sum_{k=1}^{N-2} f(z_k) - 1).
/// Proven for instances with one dominant cost gap (q = 1) and f(z_1) >= 1;
/// f(z_1) >= 1 is enforced here, the q classification is left to the caller
/// as a diagnostic since the formula itself only needs the canonical order.
double slope_bound_m(const ProblemInstance& inst);

/// Number of consecutive cost gaps f(z_i) - f(z_{i-1}) at least as wide as
/// the threshold, with f(z_0) = 0 for the marked item.  Default threshold
/// n/N.  q = 1 is the clustered regime the runtime analysis assumes.
int classify_q(const ProblemInstance& inst, double width_threshold = 0.0);

/// Piecewise-linear lower envelope of the spectral gap: a descending flank
/// 1 - (m+1) s, a plateau at g_min, and an ascending flank
/// (m+1)(s-1) + f(z_1), meeting continuously at a and b.
struct GapEnvelope {
  double m;
  double g_min;
  double a;
  double b;
  double f_z1;

  double operator()(double s) const;
  std::array<double, 2> breakpoints() const { return {a, b}; }
};

/// Requires 0 < g_min < 1 and g_min < f(z_1); throws
/// DegenerateEnvelopeError when the plateau would be empty (b <= a).
GapEnvelope envelope(const ProblemInstance& inst, double g_min);

/// Total-time estimates (per unit epsilon) for a schedule driven by the
/// envelope.  The closed form keeps only the plateau's dominant term; the
/// integral is exact over the plateau and adaptive over the flanks, so the
/// two converge as g_min shrinks.
struct RuntimeEstimate {
  double closed_form;  // D (m - f(z_1)) / ((m+1) g_min^2)
  double integral;     // D * integral of 1/envelope^2 over [0, 1]
  double big_d;        // spectral norm of dH/ds used for both
  GapEnvelope env;
};
RuntimeEstimate runtime_estimate(const ProblemInstance& inst, double g_min);

}  // namespace adia

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace adia {

/// One converged panel of an adaptive integration: endpoints, the integrand
/// at endpoints and midpoint, and the Simpson value over the panel.
struct QuadPanel {
  double a, b;
  double fa, fm, fb;
  double value;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  std::vector<QuadPanel> panels;  // ascending, contiguous
};

/// Adaptive Simpson integration of f over [a, b] with forced subdivision at
/// the given breakpoints (integrand kinks).  Throws ConvergenceError when the
/// recursion depth limit is hit, ArgumentError on a non-finite integrand
/// value (reported with its location).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10,
                           std::span<const double> breakpoints = {});

}  // namespace adia

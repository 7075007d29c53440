#include "adia/interp.hpp"

#include <algorithm>
#include <cmath>

#include "adia/errors.hpp"

namespace adia {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) {
    throw ArgumentError("interpolant needs >= 2 nodes and matching lengths");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw ArgumentError("interpolation abscissae must be strictly increasing");
    }
  }
  std::vector<double> h(n - 1), slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    slope[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  m_.assign(n, 0.0);
  m_[0] = slope[0];
  m_[n - 1] = slope[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (slope[i - 1] * slope[i] <= 0.0) {
      m_[i] = 0.0;  // local extremum: flat tangent keeps shape
    } else {
      // Brodlie weighted harmonic mean; lands inside the monotone region.
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m_[i] = (w1 + w2) / (w1 / slope[i - 1] + w2 / slope[i]);
    }
  }
  // Endpoint tangents must not overshoot (Fritsch-Carlson region edge).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (slope[i] == 0.0) {
      m_[i] = 0.0;
      m_[i + 1] = 0.0;
    } else {
      m_[i] = std::clamp(m_[i] / slope[i], 0.0, 3.0) * slope[i];
      m_[i + 1] = std::clamp(m_[i + 1] / slope[i], 0.0, 3.0) * slope[i];
    }
  }
}

std::size_t MonotoneCubic::segment(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t idx = static_cast<std::size_t>(it - x_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  if (x <= x_.front()) return m_.front();
  if (x >= x_.back()) return m_.back();
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6.0 * t2 - 6.0 * t) / h;
  const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double d01 = (-6.0 * t2 + 6.0 * t) / h;
  const double d11 = 3.0 * t2 - 2.0 * t;
  return d00 * y_[i] + d10 * m_[i] + d01 * y_[i + 1] + d11 * m_[i + 1];
}

}  // namespace adia

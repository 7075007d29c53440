#pragma once

#include <vector>

namespace adia {

/// Monotonicity-preserving piecewise-cubic interpolant (Fritsch-Carlson
/// limited tangents).  Strictly increasing data gives a strictly increasing
/// interpolant, which is what makes schedule inversion safe.  Evaluation
/// clamps to the data range.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;

  std::vector<double> x_, y_, m_;  // m_ = limited tangent at each node
};

}  // namespace adia

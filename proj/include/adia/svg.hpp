#pragma once

#include <string>
#include <vector>

namespace adia {

/// Small static line-chart writer; enough for gap curves and schedules,
/// no external tooling required to look at results.
class LineChart {
 public:
  LineChart(std::string title, std::string x_label, std::string y_label);

  void add_series(std::string name, std::vector<double> x,
                  std::vector<double> y);
  /// Dashed vertical marker (envelope breakpoints, s_star, ...).
  void add_vline(double x, std::string label);

  void write(const std::string& path) const;

 private:
  std::string title_, x_label_, y_label_;
  struct Series {
    std::string name;
    std::vector<double> x, y;
  };
  struct VLine {
    double x;
    std::string label;
  };
  std::vector<Series> series_;
  std::vector<VLine> vlines_;
};

}  // namespace adia

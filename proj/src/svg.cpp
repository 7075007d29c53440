#include "adia/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "adia/csv.hpp"
#include "adia/errors.hpp"

namespace adia {

namespace {

constexpr int kWidth = 860;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

// Round the raw span to 1/2/5 x 10^k tick spacing.
double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  if (r < 1.5) return mag;
  if (r < 3.5) return 2.0 * mag;
  if (r < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

std::string trim_label(double v) {
  // format_double keeps shortest form; clip near-zero artifacts
  if (std::abs(v) < 1e-12) v = 0.0;
  return format_double(v);
}

}  // namespace

LineChart::LineChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void LineChart::add_series(std::string name, std::vector<double> x,
                           std::vector<double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw ArgumentError("chart series needs equal non-empty x/y");
  }
  series_.push_back({std::move(name), std::move(x), std::move(y)});
}

void LineChart::add_vline(double x, std::string label) {
  vlines_.push_back({x, std::move(label)});
}

void LineChart::write(const std::string& path) const {
  if (series_.empty()) throw ArgumentError("chart has no series");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series_) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double pw = kWidth - kMarginLeft - kMarginRight;
  const double ph = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) {
    return kMarginLeft + pw * (x - xmin) / (xmax - xmin);
  };
  auto py = [&](double y) {
    return kMarginTop + ph * (1.0 - (y - ymin) / (ymax - ymin));
  };

  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title_
      << "</text>\n";

  // grid and ticks
  const double xstep = nice_step(xmax - xmin);
  const double ystep = nice_step(ymax - ymin);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">\n";
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep;
       x += xstep) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(ymin) << "\" x2=\""
        << px(x) << "\" y2=\"" << py(ymax)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\">" << trim_label(x) << "</text>\n";
  }
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep;
       y += ystep) {
    out << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(xmax) << "\" y2=\"" << py(y)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\">" << trim_label(y) << "</text>\n";
  }
  out << "</g>\n";

  // axes
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << kMarginLeft + pw / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << x_label_ << "</text>\n";
  out << "<text x=\"18\" y=\"" << kMarginTop + ph / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << kMarginTop + ph / 2 << ")\">" << y_label_ << "</text>\n";

  for (const auto& v : vlines_) {
    if (v.x < xmin || v.x > xmax) continue;
    out << "<line x1=\"" << px(v.x) << "\" y1=\"" << py(ymin) << "\" x2=\""
        << px(v.x) << "\" y2=\"" << py(ymax)
        << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
    out << "<text x=\"" << px(v.x) + 4 << "\" y=\"" << kMarginTop + 14
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#666\">"
        << v.label << "</text>\n";
  }

  for (std::size_t i = 0; i < series_.size(); ++i) {
    const auto& s = series_[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      out << px(s.x[j]) << ',' << py(s.y[j]) << ' ';
    }
    out << "\"/>\n";
    // legend entry
    const double lx = kMarginLeft + pw - 170;
    const double ly = kMarginTop + 16 + 18 * static_cast<double>(i);
    out << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 26
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << lx + 32 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace adia

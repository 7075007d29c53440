#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace adia {

/// Shortest round-trip decimal form of x, locale-independent ('.' decimal
/// point regardless of environment).
std::string format_double(double x);

/// Minimal CSV emitter: optional '#' comment lines, one header row, numeric
/// data rows.  '\n' line endings unconditionally.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();

  void comment(const std::string& text);
  void header(std::span<const std::string> names);
  void row(std::span<const double> values);
  void close();

 private:
  std::ofstream out_;
  std::string path_;
  bool closed_ = false;
};

}  // namespace adia

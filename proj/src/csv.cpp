#include "adia/csv.hpp"

#include <charconv>

#include "adia/errors.hpp"

namespace adia {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path) : out_(path), path_(path) {
  if (!out_) throw IoError("cannot open for writing: " + path);
}

CsvWriter::~CsvWriter() {
  if (!closed_) out_.flush();
}

void CsvWriter::comment(const std::string& text) {
  out_ << "# " << text << '\n';
}

void CsvWriter::header(std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out_ << ',';
    out_ << names[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::close() {
  out_.flush();
  if (!out_) throw IoError("write failed: " + path_);
  out_.close();
  closed_ = true;
}

}  // namespace adia

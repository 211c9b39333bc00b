#include "cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace spheroid::cli {

std::string csv_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::comment(const std::string& key, const std::string& value) {
  out_ << "# " << key << '=' << value << '\n';
}

}  // namespace spheroid::cli

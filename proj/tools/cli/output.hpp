#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spheroid::cli {

/// Fixed 17-significant-digit scientific notation ("%.16e"); NaN prints as
/// "nan", which strtod accepts.
std::string csv_number(double value);

/// Writes rows of a CSV table; text cells are emitted verbatim.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  /// "# key=value" summary line.
  void comment(const std::string& key, const std::string& value);

 private:
  std::ostream& out_;
};

}  // namespace spheroid::cli

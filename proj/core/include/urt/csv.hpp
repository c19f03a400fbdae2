#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace urt {

/// Minimal CSV reader for the comma-separated tables this toolkit exchanges.
/// No quoting or embedded commas; fields are trimmed of surrounding space.
class CsvReader {
 public:
  /// Reads and indexes the header line. Throws DataError on an empty stream.
  explicit CsvReader(std::istream& in);

  /// Reads the next data row. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  /// Column position for a header name, or nullopt.
  std::optional<int> column(const std::string& name) const;

  /// Column position or DataError naming the missing column.
  int require(const std::string& name) const;

  const std::vector<std::string>& header() const { return header_; }
  int64_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::vector<std::string> header_;
  std::map<std::string, int> index_;
  int64_t line_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

/// Shortest decimal text that round-trips the double exactly.
std::string format_double(double v);

/// Fixed-point with the given number of decimals.
std::string format_fixed(double v, int decimals);

double parse_double_field(const std::string& s, const char* what, int64_t line);
long long parse_int_field(const std::string& s, const char* what, int64_t line);

}  // namespace urt

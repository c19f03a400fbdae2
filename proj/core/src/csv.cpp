#include "urt/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "urt/error.hpp"

namespace urt {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::string line;
  if (!std::getline(in_, line)) {
    throw DataError("csv: empty input, missing header");
  }
  ++line_;
  header_ = split_csv_line(line);
  for (size_t i = 0; i < header_.size(); ++i) {
    index_.emplace(header_[i], static_cast<int>(i));
  }
}

bool CsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (trim(line).empty()) continue;
    fields = split_csv_line(line);
    return true;
  }
  if (in_.bad()) throw DataError("csv: stream read failure");
  return false;
}

std::optional<int> CsvReader::column(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CsvReader::require(const std::string& name) const {
  auto col = column(name);
  if (!col) throw DataError("csv: missing required column '" + name + "'");
  return *col;
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = std::strtod(buf, nullptr);
    if (back == v) break;
  }
  return buf;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

double parse_double_field(const std::string& s, const char* what, int64_t line) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
    throw DataError(std::string("csv line ") + std::to_string(line) +
                    ": bad numeric field '" + s + "' for " + what);
  }
  return v;
}

long long parse_int_field(const std::string& s, const char* what, int64_t line) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
    throw DataError(std::string("csv line ") + std::to_string(line) +
                    ": bad integer field '" + s + "' for " + what);
  }
  return v;
}

}  // namespace urt

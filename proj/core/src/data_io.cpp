// SPDX-License-Identifier: Apache-2.0
#include "dpgof/data_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "dpgof/errors.hpp"

namespace dpgof {

namespace {

std::int64_t parse_i64(std::string_view token, long line_no, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end())
    throw ParseError(std::string("expected an integer ") + what + ", got '" +
                         std::string(token) + "'",
                     line_no);
  return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

InputFormat parse_format_name(const std::string& name) {
  if (name == "raw") return InputFormat::RawCounts;
  if (name == "freq") return InputFormat::FreqPairs;
  throw ParseError("unknown input format '" + name + "' (expected 'raw' or 'freq')");
}

std::string format_name(InputFormat fmt) {
  return fmt == InputFormat::RawCounts ? "raw" : "freq";
}

FrequencyTable ingest(std::istream& in, InputFormat fmt) {
  FrequencyTable out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (fmt == InputFormat::RawCounts) {
      if (tokens.size() != 1) throw ParseError("expected a single count per line", line_no);
      const std::int64_t v = parse_i64(tokens[0], line_no, "count");
      if (v < 1) throw ParseError("non-positive value " + std::to_string(v), line_no);
      out.add(v, 1);
    } else {
      if (tokens.size() != 2) throw ParseError("expected 'value count'", line_no);
      const std::int64_t v = parse_i64(tokens[0], line_no, "value");
      const std::int64_t c = parse_i64(tokens[1], line_no, "multiplicity");
      if (v < 1) throw ParseError("non-positive value " + std::to_string(v), line_no);
      if (c < 1) throw ParseError("multiplicity must be >= 1", line_no);
      if (out.entries().contains(v))
        throw ParseError("duplicate value " + std::to_string(v), line_no);
      out.add(v, c);
    }
  }
  if (out.empty()) throw ParseError("input contains no data rows");
  return out;
}

FrequencyTable ingest_file(const std::string& path, InputFormat fmt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return ingest(in, fmt);
}

std::string freq_pairs_dump(const FrequencyTable& table) {
  std::string out;
  for (const auto& [v, c] : table.entries()) {
    out += std::to_string(v);
    out += ' ';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

LogLogDiagnostic loglog_fit(const FrequencyTable& table) {
  if (table.distinct() < 2)
    throw DomainError("loglog_fit: need at least two distinct values");
  LogLogDiagnostic diag;
  diag.points.reserve(table.distinct());
  for (const auto& [v, c] : table.entries())
    diag.points.emplace_back(std::log(static_cast<double>(v)),
                             std::log(static_cast<double>(c)));

  const auto m = static_cast<long double>(diag.points.size());
  long double mean_x = 0.0L;
  long double mean_y = 0.0L;
  for (const auto& [x, y] : diag.points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= m;
  mean_y /= m;
  long double sxx = 0.0L;
  long double sxy = 0.0L;
  long double syy = 0.0L;
  for (const auto& [x, y] : diag.points) {
    const long double dx = x - mean_x;
    const long double dy = y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  diag.slope = static_cast<double>(sxy / sxx);
  diag.intercept = static_cast<double>(mean_y - (sxy / sxx) * mean_x);
  long double ss_res = 0.0L;
  for (const auto& [x, y] : diag.points) {
    const long double r = y - (diag.intercept + diag.slope * x);
    ss_res += r * r;
  }
  diag.r_squared = syy > 0.0L ? static_cast<double>(1.0L - ss_res / syy) : 1.0;
  return diag;
}

std::string loglog_csv(const FrequencyTable& table, const LogLogDiagnostic& diag) {
  std::string out = "value,frequency,log_value,log_frequency\n";
  std::size_t i = 0;
  char buf[128];
  for (const auto& [v, c] : table.entries()) {
    const auto& [lx, ly] = diag.points[i++];
    std::snprintf(buf, sizeof(buf), "%lld,%lld,%.17g,%.17g\n", static_cast<long long>(v),
                  static_cast<long long>(c), lx, ly);
    out += buf;
  }
  return out;
}

}  // namespace dpgof

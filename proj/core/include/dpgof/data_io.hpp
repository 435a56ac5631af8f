// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dpgof/dpareto.hpp"

namespace dpgof {

// Text input formats: one positive count per line, or "value count" pairs.
// Whitespace-delimited, UTF-8; '#' starts a comment; blank lines are skipped.
enum class InputFormat { RawCounts, FreqPairs };

InputFormat parse_format_name(const std::string& name);  // "raw" | "freq"
std::string format_name(InputFormat fmt);

FrequencyTable ingest(std::istream& in, InputFormat fmt);
FrequencyTable ingest_file(const std::string& path, InputFormat fmt);

// FREQ_PAIRS text for a table; ingest of the dump reproduces the table.
std::string freq_pairs_dump(const FrequencyTable& table);

// Least-squares line through (ln value, ln frequency) over the observed
// points; its slope estimates the negated shape exponent.
struct LogLogDiagnostic {
  std::vector<std::pair<double, double>> points;  // (log value, log frequency)
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LogLogDiagnostic loglog_fit(const FrequencyTable& table);
std::string loglog_csv(const FrequencyTable& table, const LogLogDiagnostic& diag);

}  // namespace dpgof

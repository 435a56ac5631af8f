// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "dpgof/bootstrap.hpp"
#include "dpgof/data_io.hpp"
#include "dpgof/sim_study.hpp"

namespace dpgof {

inline constexpr const char* kToolName = "dpgof";
inline constexpr const char* kToolVersion = "0.1.0";

// Provenance of the data a report refers to.
struct ReportMeta {
  std::string input_path;
  InputFormat format = InputFormat::FreqPairs;
};

// Machine report for one bootstrap test. Field content is fully determined by
// the inputs and the seed, so identical invocations produce identical bytes.
std::string gof_report_json(const GofReport& report, const BootstrapConfig& cfg,
                            const ReportMeta& meta);

// Human-readable summary of the same report.
std::string gof_report_text(const GofReport& report, const BootstrapConfig& cfg);

std::string loglog_text(const LogLogDiagnostic& diag);

std::string power_table_json(const PowerTable& table);

// Versioned JSON study description; see README for the schema.
PowerStudyConfig parse_power_study_config(std::istream& in);
PowerStudyConfig parse_power_study_config_file(const std::string& path);

}  // namespace dpgof

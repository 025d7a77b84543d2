#pragma once

#include <iosfwd>
#include <string>

#include "cvxdual/config.hpp"
#include "cvxdual/report.hpp"

namespace cvxdual {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportDirEnvVar = "CVXDUAL_REPORT_DIR";

/// Execute the selected suites and collect records; does not touch the
/// filesystem.
RunReport run_suites(const SuiteConfig& config);

/// Full run: execute, write the JSONL report, print the summary. Returns the
/// process exit status (0 all passed, 1 failures).
int run_to_file(const SuiteConfig& config, const std::string& report_path, std::ostream& summary);

/// Pretty-print one recorded case from a prior report. Returns 0, or 2 when
/// the case id is unknown / the report is missing.
int explain_case(const std::string& report_path, const std::string& case_id, std::ostream& out);

/// Default report location, honoring the report-directory environment
/// variable.
std::string default_report_path();

}  // namespace cvxdual

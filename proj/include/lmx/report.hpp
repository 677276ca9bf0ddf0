#pragma once

#include "lmx/types.hpp"

#include <limits>

namespace lmx {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string check;
  std::string anchor;  // which identity / hypothesis the check exercises
  CheckStatus status = CheckStatus::Skipped;
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tol = std::numeric_limits<double>::quiet_NaN();
  std::string note;  // skip reason or extra context
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool overall_pass() const;  // skipped checks are not failures
  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
};

enum class ReportFormat { Text, JsonLines };

/// Text mode is human-readable; json-lines emits one record per check:
/// {"check":..., "anchor":..., "status":..., "residual":..., "tol":..., "note":...}
/// followed by a final {"overall": "pass"|"fail"} record.
std::string format_report(const VerificationReport& report, ReportFormat mode);

}  // namespace lmx

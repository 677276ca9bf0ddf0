#include "lmx/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

namespace lmx {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::overall_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

nlohmann::json record_json(const CheckRecord& c) {
  nlohmann::json j;
  j["check"] = c.check;
  j["anchor"] = c.anchor;
  j["status"] = to_string(c.status);
  if (std::isfinite(c.residual)) j["residual"] = c.residual;
  else j["residual"] = nullptr;
  if (std::isfinite(c.tol)) j["tol"] = c.tol;
  else j["tol"] = nullptr;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

std::string format_report(const VerificationReport& report, ReportFormat mode) {
  std::ostringstream os;
  if (mode == ReportFormat::JsonLines) {
    for (const auto& c : report.checks) os << record_json(c).dump() << "\n";
    nlohmann::json overall;
    overall["overall"] = report.overall_pass() ? "pass" : "fail";
    os << overall.dump() << "\n";
    return os.str();
  }
  for (const auto& c : report.checks) {
    os << "[" << to_string(c.status) << "] " << c.check;
    if (!c.anchor.empty()) os << "  (" << c.anchor << ")";
    os << "\n";
    if (std::isfinite(c.residual) || std::isfinite(c.tol)) {
      os << "        residual ";
      if (std::isfinite(c.residual)) os << c.residual;
      else os << "n/a";
      os << ", tol ";
      if (std::isfinite(c.tol)) os << c.tol;
      else os << "n/a";
      os << "\n";
    }
    if (!c.note.empty()) os << "        " << c.note << "\n";
  }
  os << "overall: " << (report.overall_pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace lmx

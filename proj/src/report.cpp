#include "qdp/report.hpp"

#include <sstream>

namespace qdp::io {

const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Verified: return "verified";
    case ReportStatus::Refuted: return "refuted";
    case ReportStatus::UnsatCertificate: return "unsat-certificate";
    case ReportStatus::BudgetLimited: return "budget-limited";
  }
  return "refuted";
}

int exit_code(ReportStatus s) {
  switch (s) {
    case ReportStatus::Verified:
    case ReportStatus::UnsatCertificate: return 0;
    case ReportStatus::BudgetLimited: return 3;
    case ReportStatus::Refuted: return 4;
  }
  return 4;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return 1;
    case ErrorKind::SizeGuard:
    case ErrorKind::DegreeBudget: return 3;
    default: return 2;
  }
}

ReportStatus from_legs(LegStatus s, bool unsat_style) {
  switch (s) {
    case LegStatus::Verified:
    case LegStatus::Assumed: return unsat_style ? ReportStatus::UnsatCertificate : ReportStatus::Verified;
    case LegStatus::BudgetLimited: return ReportStatus::BudgetLimited;
    case LegStatus::Refuted: return ReportStatus::Refuted;
  }
  return ReportStatus::Refuted;
}

json VerificationReport::to_json() const {
  json out = {{"schema", kSchema},
              {"command", command},
              {"statement", {{"name", statement.name}, {"claim", statement.claim}}},
              {"status", io::to_string(status)},
              {"witness", witness}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out;
}

namespace {

void flatten(std::ostringstream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  // short scalar arrays stay on one line
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) ) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(os, j[i], prefix + "[" + std::to_string(i) + "]");
    return;
  }
  os << "  " << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "command:   " << command << "\n";
  os << "statement: " << statement.name << "\n";
  os << "claim:     " << statement.claim << "\n";
  os << "status:    " << io::to_string(status) << "\n";
  if (timing_ms) os << "timing:    " << *timing_ms << " ms\n";
  os << "witness:\n";
  flatten(os, witness, "");
  return os.str();
}

json error_json(const std::string& command, ErrorKind kind, const std::string& message) {
  return {{"schema", kSchema},
          {"command", command},
          {"status", "error"},
          {"error", {{"kind", qdp::to_string(kind)}, {"message", message}}}};
}

}  // namespace qdp::io

#pragma once

#include <optional>
#include <string>

#include "qdp/certificate.hpp"
#include "qdp/error.hpp"
#include "qdp/json_io.hpp"

namespace qdp::io {

enum class ReportStatus { Verified, Refuted, UnsatCertificate, BudgetLimited };

const char* to_string(ReportStatus s);

/// 0 verified / unsat certificate, 3 budget-limited, 4 refuted.
int exit_code(ReportStatus s);
/// 1 malformed input, 3 resource budget, 2 every other domain error.
int exit_code(ErrorKind k);

/// Maps a certificate status; assumed legs never downgrade.
ReportStatus from_legs(LegStatus s, bool unsat_style);

struct Statement {
  std::string name;
  std::string claim;
};

struct VerificationReport {
  std::string command;
  Statement statement;
  ReportStatus status = ReportStatus::Verified;
  json witness;
  /// Only filled when timing was requested, so default output is reproducible.
  std::optional<double> timing_ms;

  json to_json() const;
  std::string to_text() const;
};

/// Report for a failed run.
json error_json(const std::string& command, ErrorKind kind, const std::string& message);

}  // namespace qdp::io

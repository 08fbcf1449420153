#pragma once

#include <string>
#include <vector>

namespace qdp {

enum class LegStatus { Verified, Assumed, BudgetLimited, Refuted };

inline const char* to_string(LegStatus s) {
  switch (s) {
    case LegStatus::Verified: return "verified";
    case LegStatus::Assumed: return "assumed";
    case LegStatus::BudgetLimited: return "budget-limited";
    case LegStatus::Refuted: return "refuted";
  }
  return "refuted";
}

/// One step of an obstruction argument. Assumed legs are imported facts that
/// are not computed here.
struct Leg {
  std::string name;
  LegStatus status = LegStatus::Verified;
  std::string detail;
};

/// Worst status over all computed legs (assumed legs do not count).
inline LegStatus combined_status(const std::vector<Leg>& legs) {
  LegStatus worst = LegStatus::Verified;
  for (const auto& leg : legs) {
    if (leg.status == LegStatus::Refuted) return LegStatus::Refuted;
    if (leg.status == LegStatus::BudgetLimited) worst = LegStatus::BudgetLimited;
  }
  return worst;
}

}  // namespace qdp

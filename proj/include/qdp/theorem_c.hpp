#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdp/certificate.hpp"
#include "qdp/graded.hpp"
#include "qdp/ideal.hpp"

namespace qdp::steenrod {

/// Exponents (a, b) of the basis xi^a zeta^b of the degree-2k part of F_p[xi, zeta].
std::vector<std::pair<std::uint32_t, std::uint32_t>> invariant_piece(std::uint32_t p, std::uint32_t k);

/// sum_j coords[j] * xi^a_j zeta^b_j
GradedElement invariant_element(std::uint32_t p, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& basis,
                                const std::vector<std::uint32_t>& coords);

/// All nonzero subspaces of F_p^dim as reduced row echelon bases.
std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_subspaces(std::uint32_t p, std::size_t dim);
/// One spanning vector per line of F_p^dim (leading coordinate 1).
std::vector<std::vector<std::uint32_t>> enumerate_lines(std::uint32_t p, std::size_t dim);

struct ZetaPropositionReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> piece;
  /// False when the piece has dimension > 3 and only lines were tested.
  bool all_subspaces = true;
  std::size_t subspaces_tested = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> survivors;
  std::vector<std::string> survivor_labels;
  /// zeta^(k/(p+1)) when p+1 divides k.
  std::optional<std::uint32_t> predicted_zeta_power;
  bool matches_prediction = false;
  bool budget_limited = false;
};

/// Enumerates the nonzero subspaces M of the degree-2k invariant piece and
/// keeps those generating a Steenrod-closed ideal. Throws EvenPrime,
/// DegreeBudget when 2k exceeds the budget.
ZetaPropositionReport brute_force_zeta_proposition(std::uint32_t p, std::uint32_t k,
                                                   std::uint32_t budget = kDefaultDegreeBudget);

struct LefschetzValues {
  std::int64_t nontrivial_odd = 0;   // action [[0,-1],[1,-1]] on H^n, n odd
  std::int64_t nontrivial_even = 0;  // same action, n even
  std::int64_t trivial_odd = 0;
  std::int64_t trivial_even = 0;
};

struct TheoremCCertificate {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> k_list;
  std::size_t generators_of_order_p = 0;
  LefschetzValues lefschetz;
  std::vector<ZetaPropositionReport> propositions;
  /// Exponents s with (zeta^s) tested and the finiteness verdict.
  std::vector<std::pair<std::uint32_t, Finiteness>> one_generator;
  std::vector<Leg> legs;
  LegStatus status() const { return combined_status(legs); }
};

std::vector<std::uint32_t> default_k_list(std::uint32_t p);

/// Throws EvenPrime for p = 2 (that case rests on Oliver's theorem on A_4).
TheoremCCertificate theorem_C_driver(std::uint32_t p, std::vector<std::uint32_t> k_list = {},
                                     std::uint32_t budget = kDefaultDegreeBudget);

}  // namespace qdp::steenrod

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdp/certificate.hpp"
#include "qdp/int_solver.hpp"
#include "qdp/superclass.hpp"

namespace qdp::dimfun {

using group::Element;

/// Linear system on the classes of `lattice`: monotonicity, Borel-Smith
/// conditions and the effectiveness pattern on the cyclic subgroups of the
/// Sylow subgroup (zero exactly on its center). Values are bounded by `bound`.
IntSolver effective_dimension_system(const group::PSubgroupLattice& lattice, std::int64_t bound);

struct TheoremBCertificate {
  std::uint32_t p = 0;
  std::size_t group_order = 0;
  std::size_t sylow_order = 0;
  std::vector<Element> center;      // Z(P)
  std::vector<Element> noncentral;  // C, non-central cyclic subgroup of P
  Element witness = 0;              // g Z(P) g^-1 = C, smallest such g
  std::string witness_label;
  std::size_t witness_count = 0;

  // Constraint system over G-conjugacy classes.
  std::size_t variables = 0;
  std::size_t constraints = 0;
  bool unsat = false;
  bool refuted_by_propagation = false;
  std::vector<std::string> conflict;
  std::size_t search_nodes = 0;

  // Z(P) and C share a G-class, so every class function agrees on them.
  bool fusion_forces_equality = false;
  bool methods_agree = false;

  // Same system over P-conjugacy classes only.
  bool control_sat = false;
  std::vector<std::int64_t> control_solution;
  std::vector<std::string> control_classes;
  bool control_realized = false;

  std::vector<Leg> legs;
  LegStatus status() const { return combined_status(legs); }
};

/// Throws EvenPrime for p = 2, CompositeP, SizeGuard.
TheoremBCertificate qdp_obstruction_theorem_B(std::uint32_t p, std::size_t size_guard = group::kDefaultSizeGuard);

}  // namespace qdp::dimfun

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdp/repchar.hpp"
#include "qdp/subgroups.hpp"
#include "qdp/superclass.hpp"

namespace qdp::dimfun {

using group::Element;

struct BorelSmithViolation {
  std::string condition;  // "i", "ii" or "iii"
  /// (H, K) or (H, L, K), each as sorted members.
  std::vector<std::vector<Element>> subgroups;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct BorelSmithReport {
  bool monotone = true;
  std::vector<BorelSmithViolation> violations;
  std::size_t pairs_checked = 0;
  bool passes() const { return violations.empty(); }
};

/// Conditions (i), (ii) (odd p) and (iii) (p = 2) over all tagged normal
/// pairs inside the Sylow subgroup; every pair of p-subgroups is conjugate
/// to one of these.
BorelSmithReport check_borel_smith(const SuperClassFunction& tau);

struct MonotoneResult {
  bool monotone = true;
  /// H <= K with tau(K) > tau(H).
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> witness;
};

MonotoneResult is_monotone(const SuperClassFunction& tau);

/// Fiber join of m copies: values and scale multiplied by m.
SuperClassFunction join_dimension_function(const SuperClassFunction& tau, std::int64_t m);

struct EulerDatum {
  std::int64_t degree = 0;
  /// Lattice class of each codimension-one subgroup W -> tau(W) - tau(V).
  std::map<std::size_t, std::int64_t> factor_degrees;
};

struct CodimOneResult {
  bool holds = false;
  std::int64_t lhs = 0;  // tau(1) - tau(V)
  std::int64_t rhs = 0;  // sum over lines W of tau(W) - tau(V)
  EulerDatum euler;
};

/// V must be elementary abelian of rank two; throws DomainMismatch otherwise.
CodimOneResult check_codim_one_sum(const SuperClassFunction& tau, const group::Subgroup& v);

/// Smallest m <= max_m with join_dimension_function(tau, m) Borel-Smith.
std::optional<std::int64_t> smallest_passing_multiple(const SuperClassFunction& tau, std::int64_t max_m);

struct Realization {
  /// Coefficient of each basis entry.
  std::vector<std::int64_t> coefficients;
  std::size_t nodes = 0;
  /// Basis indices repeated by multiplicity.
  std::vector<std::size_t> multiset() const;
};

/// Nonnegative integer combination of realified basis functions equal to tau,
/// or nothing if none exists. Throws NotMonotone / NotBorelSmith.
std::optional<Realization> realize_as_representation(const SuperClassFunction& tau,
                                                     const repchar::RealRepresentationBasis& basis);

/// sum_i a_i * dim(basis_i)
SuperClassFunction combine(const LatticePtr& lattice, const repchar::RealRepresentationBasis& basis,
                           const std::vector<std::int64_t>& coefficients);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// L(f) = tr H^0 + (-1)^n tr H^n + tr H^2n on a product of two n-spheres.
std::int64_t lefschetz_number(std::int64_t n, const IntMatrix& h0, const IntMatrix& hn, const IntMatrix& h2n);

struct GenerationResult {
  bool generated = false;
  std::vector<Element> witnesses;  // order-p elements generating the closure
  std::size_t closure_order = 0;
};

GenerationResult generation_by_order_p(const group::GroupPtr& g, std::uint32_t p);

}  // namespace qdp::dimfun

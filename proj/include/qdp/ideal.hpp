#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qdp/graded.hpp"

namespace qdp::steenrod {

inline constexpr std::uint32_t kDefaultDegreeBudget = 200;

/// Ideal generated by finitely many homogeneous elements, with a degreewise
/// echelon basis computed on demand and cached.
class IdealHandle {
 public:
  /// Throws Inhomogeneous, PrimeMismatch. Zero generators are dropped.
  IdealHandle(std::uint32_t p, std::vector<GradedElement> generators, int rank = 2,
              std::uint32_t degree_budget = kDefaultDegreeBudget);

  std::uint32_t prime() const { return p_; }
  int rank() const { return rank_; }
  std::uint32_t degree_budget() const { return budget_; }
  const std::vector<GradedElement>& generators() const { return gens_; }

  /// Exact membership of a homogeneous element. Throws Inhomogeneous, or
  /// DegreeBudget when its degree exceeds the budget.
  bool contains(const GradedElement& a) const;

  /// Dimension of the ideal in one degree.
  std::size_t dimension(std::uint32_t deg) const;

 private:
  struct Echelon {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t, MonomialOrder> index;
    std::vector<std::vector<std::uint32_t>> rows;  // reduced, leading entry 1
    std::vector<std::size_t> pivots;
  };
  const Echelon& basis(std::uint32_t deg) const;

  std::uint32_t p_;
  int rank_;
  std::uint32_t budget_;
  std::vector<GradedElement> gens_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<Echelon>> cache_;
};

bool ideal_membership(const GradedElement& a, const IdealHandle& ideal);

struct ClosureResult {
  bool closed = true;
  bool budget_limited = false;
  /// First failing (generator index, operation), operation "beta" or "P^i".
  std::optional<std::pair<std::size_t, std::string>> witness;
};

/// beta and P^i (2i <= deg) of every generator lie in the ideal. Over F_2[t]
/// the squares Sq^i, i <= deg, are checked instead.
ClosureResult is_steenrod_closed(const IdealHandle& ideal);

enum class Finiteness { Finite, Infinite, BudgetLimited };
std::string to_string(Finiteness f);

struct FinitenessResult {
  Finiteness verdict = Finiteness::BudgetLimited;
  /// Finite: x^N and y^N lie in the ideal.
  std::optional<std::uint32_t> exponent;
  /// Infinite: a common F_p-zero (a, b) != 0 of the polynomial parts of the generators.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> common_zero;
};

/// Is H*(V)/I finite dimensional? Rank two only.
FinitenessResult quotient_finite_dimensional(const IdealHandle& ideal);

}  // namespace qdp::steenrod

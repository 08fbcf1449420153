#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdp::dimfun {

/// Small finite-domain integer solver: bounded variables, linear equalities,
/// linear inequalities and parity constraints. Bounds propagation plus
/// depth-first search in variable order, smallest values first.
class IntSolver {
 public:
  struct Term {
    std::size_t var;
    std::int64_t coeff;
    friend auto operator<=>(const Term&, const Term&) = default;
  };
  enum class Kind { Eq, Le, Even };
  struct Constraint {
    Kind kind;
    std::vector<Term> terms;
    std::int64_t rhs = 0;  // Eq: sum == rhs, Le: sum <= rhs, Even: sum - rhs even
    std::string label;
  };

  std::size_t add_variable(std::string name, std::int64_t lo, std::int64_t hi);
  void add(Constraint c);
  void add_eq(std::vector<Term> terms, std::int64_t rhs, std::string label);
  void add_le(std::vector<Term> terms, std::int64_t rhs, std::string label);
  void add_even(std::vector<Term> terms, std::int64_t rhs, std::string label);

  struct Result {
    bool satisfiable = false;
    std::vector<std::int64_t> solution;
    /// Labels of the constraints that clash at the root, if propagation alone
    /// refutes the system; empty when search was needed.
    std::vector<std::string> conflict;
    bool refuted_by_propagation = false;
    std::size_t nodes = 0;
  };
  Result solve() const;

  std::size_t variable_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Checks a full assignment against every constraint; returns the labels of violated ones.
  std::vector<std::string> violated(const std::vector<std::int64_t>& values) const;

 private:
  struct Domain {
    std::int64_t lo, hi;
    std::size_t lo_reason, hi_reason;  // constraint index, or npos for the declaration
  };
  bool propagate(std::vector<Domain>& dom, std::size_t& failed) const;

  std::vector<std::string> names_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<Constraint> constraints_;
};

}  // namespace qdp::dimfun

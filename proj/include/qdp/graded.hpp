#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdp/group.hpp"

namespace qdp::steenrod {

/// x^a y^b u^e v^d (rank two) or t^a s^e (rank one, b = d = 0).
struct Monomial {
  std::uint32_t a = 0, b = 0;
  std::uint8_t e = 0, d = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic order in the exponents of x > y > u > v.
struct MonomialOrder {
  bool operator()(const Monomial& l, const Monomial& r) const { return r < l; }
};

/// Element of F_p[x,y] (x) Lambda(u,v), or of the rank-one ring
/// F_p[t] (x) Lambda(s) (for p = 2 just F_2[t] with t in degree one).
///
/// Degrees: |x| = |y| = 2, |u| = |v| = 1 (rank two); |t| = 2, |s| = 1 for odd
/// p and |t| = 1 for p = 2 (rank one).
class GradedElement {
 public:
  using Terms = std::map<Monomial, std::uint32_t, MonomialOrder>;

  GradedElement(std::uint32_t p, int rank = 2);

  static GradedElement constant(std::uint32_t p, std::int64_t c, int rank = 2);
  static GradedElement monomial(std::uint32_t p, Monomial m, std::int64_t c = 1, int rank = 2);
  static GradedElement x(std::uint32_t p) { return monomial(p, {1, 0, 0, 0}); }
  static GradedElement y(std::uint32_t p) { return monomial(p, {0, 1, 0, 0}); }
  static GradedElement u(std::uint32_t p) { return monomial(p, {0, 0, 1, 0}); }
  static GradedElement v(std::uint32_t p) { return monomial(p, {0, 0, 0, 1}); }
  static GradedElement t(std::uint32_t p) { return monomial(p, {1, 0, 0, 0}, 1, 1); }
  /// Exterior generator of the rank-one ring; odd p only.
  static GradedElement s(std::uint32_t p);

  /// Parses "c*x^a*y^b*u*v + ..." (or t, s for rank one); "-" and omitted
  /// coefficients allowed. Throws MalformedInput.
  static GradedElement parse(std::uint32_t p, const std::string& text, int rank = 2);

  std::uint32_t prime() const { return p_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(const Monomial& m) const;

  static std::uint32_t degree_of(const Monomial& m, std::uint32_t p, int rank);
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element; throws Inhomogeneous otherwise.
  std::uint32_t degree() const;
  /// Homogeneous component of the given degree.
  GradedElement component(std::uint32_t deg) const;
  /// Part with no exterior factor.
  GradedElement polynomial_part() const;

  void add_term(const Monomial& m, std::int64_t c);
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  GradedElement operator-() const;
  GradedElement scaled(std::int64_t c) const;
  GradedElement pow(std::uint64_t k) const;

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.p_ == b.p_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Canonical "c*x^a*y^b*u*v" terms joined by " + ".
  std::string to_string() const;
  /// One string per term, canonical order.
  std::vector<std::string> term_strings() const;

 private:
  std::uint32_t p_;
  int rank_;
  Terms terms_;
};

/// Graded-commutative product with Koszul signs. Throws PrimeMismatch.
GradedElement multiply(const GradedElement& a, const GradedElement& b);
inline GradedElement operator*(const GradedElement& a, const GradedElement& b) { return multiply(a, b); }

/// Derivation with beta(u) = x, beta(v) = y (beta(s) = t in rank one; Sq^1 for p = 2).
GradedElement bockstein(const GradedElement& a);

/// Reduced power P^i (Sq^i on F_2[t] when p = 2). Rank two needs odd p.
GradedElement steenrod_power(std::uint32_t i, const GradedElement& a);

/// Ring automorphism induced by A in SL_2(F_p): u -> A11 u + A21 v,
/// v -> A12 u + A22 v and likewise on x, y, so that act(A) act(B) = act(AB).
/// Throws NotUnimodular.
GradedElement sl2_act(const group::Mat2& a, const GradedElement& elem);

struct InvariantPair {
  GradedElement xi;
  GradedElement zeta;
};

/// xi = sum_{i=0}^p (x^(p-i) y^i)^(p-1), zeta = x y^p - y x^p. Odd p.
InvariantPair invariants(std::uint32_t p);

/// All monomials of the given degree in canonical order.
std::vector<Monomial> monomials_of_degree(std::uint32_t p, int rank, std::uint32_t deg);

}  // namespace qdp::steenrod

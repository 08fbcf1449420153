#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qdp::group {

using Element = std::uint32_t;

/// Default cap on the order of groups we are willing to build or enumerate.
inline constexpr std::size_t kDefaultSizeGuard = 5000;

/// 2x2 matrix over Z/p stored row-major as (a, b, c, d).
using Mat2 = std::array<std::uint32_t, 4>;

/// Structured description of (Z/p)^2 x| SL_2(Z/p).
///
/// Element index = m * p^2 + v0 * p + v1 where m is the position of the
/// matrix in `matrices` (lexicographic order of (a, b, c, d)). The product is
/// (v, A)(w, B) = (v + Aw, AB).
struct QdOrigin {
  std::uint32_t p = 0;
  std::vector<Mat2> matrices;
};

/// A finite group on the index set {0, ..., n-1}.
///
/// Immutable after construction. Small groups carry an explicit
/// multiplication table; Qd(p) multiplies through its semidirect structure so
/// that no n*n table is ever materialized.
class FiniteGroup {
 public:
  /// Validates shape, identity and inverses (associativity is checked
  /// separately by verify_associativity because it is expensive).
  static std::shared_ptr<const FiniteGroup> from_table(std::size_t n, std::vector<Element> table,
                                                       std::string name = "table");

  static std::shared_ptr<const FiniteGroup> from_qd(QdOrigin origin);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const {
    if (!qd_) return table_[static_cast<std::size_t>(a) * n_ + b];
    const std::uint32_t pp = qd_->p * qd_->p;
    const std::uint32_t ma = a / pp, va = a % pp, mb = b / pp, vb = b % pp;
    const std::uint32_t m = qd_mat_mul_[ma * qd_->matrices.size() + mb];
    const std::uint32_t w = qd_act_[ma * pp + vb];
    return m * pp + qd_vec_add_[va * pp + w];
  }

  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element h) const { return mul(mul(g, h), inverse(g)); }
  Element power(Element a, std::uint64_t k) const;
  std::size_t element_order(Element a) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  const std::optional<QdOrigin>& qd_origin() const noexcept { return qd_; }

  /// Qd(p) only: pack/unpack (v, A).
  Element qd_element(std::uint32_t v0, std::uint32_t v1, const Mat2& a) const;
  std::pair<std::array<std::uint32_t, 2>, Mat2> qd_decode(Element e) const;

  /// Human-readable element label: "(v0,v1|a,b,c,d)" for Qd(p), index otherwise.
  std::string describe(Element e) const;

  /// Full multiplication table (n*n); used for serialization and small groups.
  std::vector<Element> table() const;

  /// A generating set chosen greedily in ascending index order.
  const std::vector<Element>& generators() const { return generators_; }

  /// Associativity. Exhaustive over all triples when n <= exhaustive_limit,
  /// otherwise Light's test over the generating set (which is complete).
  bool verify_associativity(std::size_t exhaustive_limit = 256) const;

 private:
  FiniteGroup() = default;
  void finish_setup();

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::optional<QdOrigin> qd_;
  std::vector<std::uint32_t> qd_mat_mul_;
  std::vector<std::uint32_t> qd_act_;
  std::vector<std::uint32_t> qd_vec_add_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// (Z/p)^2 x| SL_2(Z/p). Throws CompositeP / SizeGuard.
GroupPtr construct_qdp(std::uint32_t p, std::size_t size_guard = kDefaultSizeGuard);

GroupPtr cyclic(std::size_t n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr elementary_abelian(std::uint32_t p, std::size_t rank);

/// <a, b | a^m = 1, b^s = a^t, b a b^-1 = a^r>; elements a^i b^j.
/// Throws MalformedInput when the parameters do not define a group of order m*s.
GroupPtr metacyclic(std::size_t m, std::size_t s, std::size_t t, std::size_t r, std::string name);

GroupPtr dihedral(std::size_t order);
GroupPtr generalized_quaternion(std::size_t order);
GroupPtr semidihedral(std::size_t order);
GroupPtr modular_2group(std::size_t order);

/// Upper unitriangular 3x3 matrices over F_p (extraspecial of exponent p for odd p).
GroupPtr heisenberg(std::uint32_t p);

GroupPtr symmetric(std::size_t degree);

/// Bijective homomorphism G -> H by backtracking over images of G's generators.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace qdp::group

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdp/cyclotomic.hpp"
#include "qdp/group.hpp"
#include "qdp/subgroups.hpp"
#include "qdp/superclass.hpp"

namespace qdp::repchar {

using group::Element;
using group::GroupPtr;

/// Conjugacy classes ordered by their smallest element.
struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
};

ConjugacyClasses conjugacy_classes(const group::FiniteGroup& g);

/// A class function with values in Z[zeta_e], e the exponent of the group.
class Character {
 public:
  Character(GroupPtr g, std::shared_ptr<const ConjugacyClasses> classes, std::vector<Cyclotomic> values);

  const GroupPtr& group() const { return group_; }
  const ConjugacyClasses& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses>& classes_ptr() const { return classes_; }
  std::uint32_t cyclotomic_order() const { return values_.front().order(); }

  /// Values per conjugacy class.
  const std::vector<Cyclotomic>& class_values() const { return values_; }
  const Cyclotomic& operator()(Element g) const { return values_[classes_->class_of[g]]; }
  std::int64_t degree() const { return values_[classes_->class_of[group_->identity()]].as_integer(); }

  Character conj() const;
  friend Character operator+(const Character& a, const Character& b);
  Character scaled(std::int64_t k) const;

  friend bool operator==(const Character& a, const Character& b) { return a.values_ == b.values_; }
  /// Canonical order: degree, then values class by class.
  friend bool operator<(const Character& a, const Character& b);

 private:
  GroupPtr group_;
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<Cyclotomic> values_;
};

/// <a, b> as an exact integer; throws NonIntegral otherwise.
std::int64_t inner_product(const Character& a, const Character& b);

Character trivial_character(const GroupPtr& g, std::shared_ptr<const ConjugacyClasses> classes = nullptr);
Character regular_character(const GroupPtr& g, std::shared_ptr<const ConjugacyClasses> classes = nullptr);

/// Linear characters of a subgroup, each as exponents k (value zeta_e^k) per
/// member of H in sorted member order.
std::vector<std::vector<std::uint32_t>> linear_characters(const group::Subgroup& h, std::uint32_t e);

/// Complete list of irreducible characters of a p-group in canonical order.
/// Throws NotPGroup or IncompleteInduction.
std::vector<Character> irreducible_characters(const GroupPtr& p_group);

/// (1/|G|) sum chi(g^2), in {-1, 0, 1} for irreducibles.
int frobenius_schur(const Character& chi);

/// <chi|_H, 1>; throws NonIntegral when the average is not an integer.
std::int64_t fixed_dimension(const Character& chi, const group::Subgroup& h);

enum class RealType { Real, ComplexPair, Quaternionic };
std::string to_string(RealType t);

struct RealBasisEntry {
  Character character;
  RealType type;
  /// 1 for real type, 2 otherwise (fixed dimensions double on realification).
  std::int64_t multiplier;
  std::int64_t real_degree() const { return multiplier * character.degree(); }
};

/// One entry per irreducible real representation: real characters, one
/// character from each conjugate pair, and quaternionic characters.
struct RealRepresentationBasis {
  GroupPtr group;
  std::vector<RealBasisEntry> entries;
};

RealRepresentationBasis real_representation_basis(const GroupPtr& p_group);
RealRepresentationBasis real_representation_basis(const GroupPtr& g, const std::vector<Character>& irreducibles);

/// Q -> dim of the Q-fixed subspace of the real representation.
dimfun::SuperClassFunction real_dimension_function(const RealBasisEntry& entry, const dimfun::LatticePtr& lattice);

}  // namespace qdp::repchar

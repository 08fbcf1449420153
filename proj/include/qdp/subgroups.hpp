#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdp/group.hpp"

namespace qdp::group {

/// A subgroup, stored as the sorted list of its members in the parent group.
class Subgroup {
 public:
  /// Members are sorted; closure is not re-verified here (see is_closed).
  Subgroup(GroupPtr parent, std::vector<Element> members);

  const FiniteGroup& group() const { return *parent_; }
  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const;
  bool contains(const Subgroup& other) const;

  /// Closed under multiplication and inverse, contains the identity.
  bool is_closed() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Canonical order: by order, then lexicographically by members.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
};

Subgroup generate(const GroupPtr& g, std::span<const Element> gens);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

/// g H g^-1
Subgroup conjugate(const Subgroup& h, Element g);

/// Some g with g H g^-1 = K (the smallest such index), or nothing.
std::optional<Element> is_conjugate(const Subgroup& h, const Subgroup& k);
/// Every g with g H g^-1 = K, ascending.
std::vector<Element> conjugating_elements(const Subgroup& h, const Subgroup& k);

Subgroup normalizer(const Subgroup& h);
/// H normal in K (H must be contained in K).
bool is_normal_in(const Subgroup& h, const Subgroup& k);

/// Members of H commuting with all of H.
Subgroup center(const Subgroup& h);

/// Exponent of H (lcm of element orders).
std::size_t exponent(const Subgroup& h);

bool is_p_group(const Subgroup& h, std::uint32_t p);

/// A Sylow p-subgroup. For Qd(p) this is generated by (e1, I), (e2, I) and
/// (0, [[1,1],[0,1]]); otherwise it is grown one normalizer step at a time.
Subgroup sylow_p_subgroup(const GroupPtr& g, std::uint32_t p);

/// Same as sylow_p_subgroup but never uses structural shortcuts.
Subgroup sylow_p_subgroup_generic(const GroupPtr& g, std::uint32_t p);

/// All subgroups of a p-group, in canonical order.
std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_group);

/// All cyclic subgroups <g>, g in H, deduplicated, canonical order.
std::vector<Subgroup> cyclic_subgroups(const Subgroup& h);

/// The subgroup H viewed as a group in its own right. `embedding[i]` is the
/// parent element corresponding to index i of the new group.
struct StandaloneGroup {
  GroupPtr group;
  std::vector<Element> embedding;
};
StandaloneGroup as_group(const Subgroup& h);

enum class QuotientKind { ElementaryAbelianRank2, CyclicP, Cyclic4, GeneralizedQuaternion, Other };

struct QuotientTag {
  QuotientKind kind = QuotientKind::Other;
  std::size_t order = 0;
  friend bool operator==(const QuotientTag&, const QuotientTag&) = default;
};

std::string to_string(const QuotientTag& tag);

/// K/H realized through cosets. Coset c is represented by `reps[c]`; the
/// identity coset is 0.
struct Quotient {
  std::vector<Element> reps;
  std::vector<std::size_t> table;   // q*q
  std::map<Element, std::size_t> coset_of;  // every element of K -> coset
  std::size_t order() const { return reps.size(); }
};

Quotient quotient(const Subgroup& h, const Subgroup& k);
QuotientTag classify_quotient(const Quotient& q, std::uint32_t p);

struct NormalPair {
  std::size_t h = 0;  // index into subgroups
  std::size_t k = 0;
  QuotientTag tag;
  /// ElementaryAbelianRank2: the p+1 preimages of the order-p subgroups of K/H.
  /// Cyclic4 / GeneralizedQuaternion: the preimage L of the unique involution subgroup.
  std::vector<std::size_t> between;
};

struct PGroupPairs {
  std::vector<Subgroup> subgroups;
  std::vector<NormalPair> pairs;
};

/// All H normal in K <= P with |K/H| in {p, p^2} (p odd) or a power of two
/// (p = 2), tagged by the isomorphism type of K/H.
PGroupPairs normal_pairs_with_tag(const Subgroup& p_group);

/// The set of all p-subgroups of G together with their G-conjugacy classes.
class PSubgroupLattice {
 public:
  PSubgroupLattice(GroupPtr g, std::uint32_t p, std::size_t size_guard = kDefaultSizeGuard);

  const GroupPtr& group() const { return group_; }
  std::uint32_t prime() const { return p_; }
  const Subgroup& sylow() const { return sylow_; }

  /// Every p-subgroup of G, canonical order.
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t class_of(std::size_t subgroup_index) const { return class_of_[subgroup_index]; }
  /// classes()[c] lists subgroup indices; the first entry lies in the Sylow subgroup.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  const Subgroup& representative(std::size_t cls) const { return subgroups_[classes_[cls].front()]; }

  std::optional<std::size_t> index_of(const std::vector<Element>& members) const;
  /// Class of an arbitrary p-subgroup; throws DomainMismatch if it is not one.
  std::size_t class_of(const Subgroup& h) const;

  /// Subgroups of the Sylow subgroup, canonical order (indices into subgroups()).
  const std::vector<std::size_t>& sylow_subgroups() const { return sylow_subgroups_; }

  /// Tagged normal pairs inside the Sylow subgroup, computed once on demand.
  /// `class_of[i]` is the lattice class of pairs.subgroups[i].
  struct SylowPairs {
    PGroupPairs pairs;
    std::vector<std::size_t> class_of;
  };
  const SylowPairs& sylow_pairs() const;

 private:
  GroupPtr group_;
  std::uint32_t p_;
  Subgroup sylow_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> sylow_subgroups_;
  std::map<std::vector<Element>, std::size_t> index_;
  mutable std::once_flag pairs_once_;
  mutable std::unique_ptr<SylowPairs> pairs_;
};

}  // namespace qdp::group

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qdp/subgroups.hpp"

namespace qdp::dimfun {

using LatticePtr = std::shared_ptr<const group::PSubgroupLattice>;

LatticePtr make_lattice(const group::GroupPtr& g, std::uint32_t p,
                        std::size_t size_guard = group::kDefaultSizeGuard);

/// Integer function on the p-subgroups of a group, constant on conjugacy
/// classes. The represented function is values / scale.
class SuperClassFunction {
 public:
  /// values[c] is the value on lattice class c. Throws DomainMismatch on a
  /// size mismatch.
  SuperClassFunction(LatticePtr lattice, std::vector<std::int64_t> values, std::int64_t scale = 1);

  static SuperClassFunction constant(LatticePtr lattice, std::int64_t c);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t scale() const { return scale_; }
  std::uint32_t prime() const { return lattice_->prime(); }

  std::int64_t value(std::size_t cls) const { return values_.at(cls); }
  std::int64_t at(const group::Subgroup& h) const { return values_[lattice_->class_of(h)]; }

  SuperClassFunction& operator+=(const SuperClassFunction& o);
  friend SuperClassFunction operator+(SuperClassFunction a, const SuperClassFunction& b) { return a += b; }
  SuperClassFunction scaled(std::int64_t k) const;

  friend bool operator==(const SuperClassFunction& a, const SuperClassFunction& b) {
    return a.lattice_ == b.lattice_ && a.values_ == b.values_ && a.scale_ == b.scale_;
  }

 private:
  LatticePtr lattice_;
  std::vector<std::int64_t> values_;
  std::int64_t scale_ = 1;
};

}  // namespace qdp::dimfun

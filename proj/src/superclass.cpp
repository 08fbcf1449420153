#include "qdp/superclass.hpp"

#include "qdp/error.hpp"

namespace qdp::dimfun {

LatticePtr make_lattice(const group::GroupPtr& g, std::uint32_t p, std::size_t size_guard) {
  return std::make_shared<const group::PSubgroupLattice>(g, p, size_guard);
}

SuperClassFunction::SuperClassFunction(LatticePtr lattice, std::vector<std::int64_t> values, std::int64_t scale)
    : lattice_(std::move(lattice)), values_(std::move(values)), scale_(scale) {
  if (!lattice_) throw Error(ErrorKind::DomainMismatch, "super class function needs a lattice");
  if (values_.size() != lattice_->class_count())
    throw Error(ErrorKind::DomainMismatch, "expected " + std::to_string(lattice_->class_count()) +
                                               " class values, got " + std::to_string(values_.size()));
  if (scale_ <= 0) throw Error(ErrorKind::DomainMismatch, "scale must be positive");
}

SuperClassFunction SuperClassFunction::constant(LatticePtr lattice, std::int64_t c) {
  const std::size_t n = lattice->class_count();
  return SuperClassFunction(std::move(lattice), std::vector<std::int64_t>(n, c));
}

SuperClassFunction& SuperClassFunction::operator+=(const SuperClassFunction& o) {
  if (o.lattice_ != lattice_) throw Error(ErrorKind::DomainMismatch, "functions live on different lattices");
  if (o.scale_ != scale_) throw Error(ErrorKind::DomainMismatch, "functions have different scales");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

SuperClassFunction SuperClassFunction::scaled(std::int64_t k) const {
  SuperClassFunction out = *this;
  for (auto& v : out.values_) v *= k;
  return out;
}

}  // namespace qdp::dimfun

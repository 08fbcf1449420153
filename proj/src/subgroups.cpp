#include "qdp/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::group {

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Element e) const { return std::binary_search(members_.begin(), members_.end(), e); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

bool Subgroup::is_closed() const {
  if (!contains(parent_->identity())) return false;
  for (Element a : members_) {
    if (!contains(parent_->inverse(a))) return false;
    for (Element b : members_)
      if (!contains(parent_->mul(a, b))) return false;
  }
  return true;
}

Subgroup generate(const GroupPtr& g, std::span<const Element> gens) {
  std::vector<char> in(g->order(), 0);
  std::vector<Element> members{g->identity()};
  in[g->identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (Element s : gens) {
      const Element y = g->mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup conjugate(const Subgroup& h, Element g) {
  std::vector<Element> out;
  out.reserve(h.order());
  const auto& grp = h.group();
  const Element gi = grp.inverse(g);
  for (Element x : h.members()) out.push_back(grp.mul(grp.mul(g, x), gi));
  return Subgroup(h.parent(), std::move(out));
}

namespace {

bool conjugates_into(const Subgroup& h, const Subgroup& k, Element g) {
  const auto& grp = h.group();
  const Element gi = grp.inverse(g);
  for (Element x : h.members())
    if (!k.contains(grp.mul(grp.mul(g, x), gi))) return false;
  return true;
}

}  // namespace

std::optional<Element> is_conjugate(const Subgroup& h, const Subgroup& k) {
  if (h.order() != k.order()) return std::nullopt;
  for (Element g = 0; g < h.group().order(); ++g)
    if (conjugates_into(h, k, g)) return g;
  return std::nullopt;
}

std::vector<Element> conjugating_elements(const Subgroup& h, const Subgroup& k) {
  std::vector<Element> out;
  if (h.order() != k.order()) return out;
  for (Element g = 0; g < h.group().order(); ++g)
    if (conjugates_into(h, k, g)) out.push_back(g);
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  std::vector<Element> out;
  for (Element g = 0; g < h.group().order(); ++g)
    if (conjugates_into(h, h, g)) out.push_back(g);
  return Subgroup(h.parent(), std::move(out));
}

bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  for (Element g : k.members())
    if (!conjugates_into(h, h, g)) return false;
  return true;
}

Subgroup center(const Subgroup& h) {
  const auto& grp = h.group();
  std::vector<Element> out;
  for (Element z : h.members()) {
    bool central = true;
    for (Element x : h.members())
      if (!grp.commute(z, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return Subgroup(h.parent(), std::move(out));
}

std::size_t exponent(const Subgroup& h) {
  std::size_t e = 1;
  for (Element x : h.members()) e = std::lcm(e, h.group().element_order(x));
  return e;
}

bool is_p_group(const Subgroup& h, std::uint32_t p) { return fp::p_part(h.order(), p) == h.order(); }

Subgroup sylow_p_subgroup_generic(const GroupPtr& g, std::uint32_t p) {
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  const std::size_t target = fp::p_part(g->order(), p);
  Subgroup h = trivial_subgroup(g);
  while (h.order() < target) {
    // N(H)/H has order divisible by p; any g in N(H) \ H with g^p in H extends H.
    const Subgroup n = normalizer(h);
    bool grown = false;
    for (Element x : n.members()) {
      if (h.contains(x) || !h.contains(g->power(x, p))) continue;
      std::vector<Element> gens = h.members();
      gens.push_back(x);
      h = generate(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw Error(ErrorKind::DomainMismatch, "Sylow construction stalled");
  }
  return h;
}

Subgroup sylow_p_subgroup(const GroupPtr& g, std::uint32_t p) {
  const auto& qd = g->qd_origin();
  if (qd && qd->p == p) {
    const std::vector<Element> gens{g->qd_element(1, 0, {1, 0, 0, 1}), g->qd_element(0, 1, {1, 0, 0, 1}),
                                    g->qd_element(0, 0, {1, 1, 0, 1})};
    return generate(g, gens);
  }
  return sylow_p_subgroup_generic(g, p);
}

std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_group) {
  const auto& parent = p_group.parent();
  std::set<Subgroup> all;
  std::vector<Subgroup> layer{trivial_subgroup(parent)};
  all.insert(layer.front());
  // Every subgroup of order p^(k+1) contains a normal subgroup of order p^k,
  // so it is <H, g> for some H in the previous layer.
  while (!layer.empty()) {
    std::set<Subgroup> next;
    for (const Subgroup& h : layer) {
      for (Element x : p_group.members()) {
        if (h.contains(x)) continue;
        std::vector<Element> gens = h.members();
        gens.push_back(x);
        Subgroup k = generate(parent, gens);
        // keep only index-p extensions so that every layer is complete
        const std::size_t idx = k.order() / h.order();
        if (fp::is_prime(idx) && !all.count(k)) next.insert(std::move(k));
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::vector<Subgroup> cyclic_subgroups(const Subgroup& h) {
  std::set<Subgroup> out;
  for (Element x : h.members()) {
    const Element gens[1] = {x};
    out.insert(generate(h.parent(), gens));
  }
  return {out.begin(), out.end()};
}

StandaloneGroup as_group(const Subgroup& h) {
  const auto& m = h.members();
  const std::size_t n = m.size();
  std::map<Element, Element> pos;
  for (std::size_t i = 0; i < n; ++i) pos[m[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pos.at(h.group().mul(m[i], m[j]));
  return {FiniteGroup::from_table(n, std::move(table), h.group().name() + "-sub"), m};
}

PSubgroupLattice::PSubgroupLattice(GroupPtr g, std::uint32_t p, std::size_t size_guard)
    : group_(std::move(g)), p_(p), sylow_(trivial_subgroup(group_)) {
  if (group_->order() > size_guard)
    throw Error(ErrorKind::SizeGuard, "group order " + std::to_string(group_->order()) + " exceeds guard");
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  sylow_ = sylow_p_subgroup(group_, p);
  const std::vector<Subgroup> local = subgroups_of_p_group(sylow_);

  // Orbits under conjugation by the group generators; every p-subgroup is
  // conjugate into the Sylow subgroup, so the orbits cover all of them.
  std::set<Subgroup> seen;
  std::vector<std::vector<Subgroup>> orbits;
  for (const Subgroup& h : local) {
    if (seen.count(h)) continue;
    std::vector<Subgroup> orbit{h};
    seen.insert(h);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element s : group_->generators()) {
        Subgroup c = conjugate(orbit[i], s);
        if (!seen.count(c)) {
          seen.insert(c);
          orbit.push_back(std::move(c));
        }
      }
    orbits.push_back(std::move(orbit));
  }
  subgroups_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) index_[subgroups_[i].members()] = i;
  class_of_.assign(subgroups_.size(), 0);
  // `local` is in canonical order, so orbits are already ordered by their
  // first Sylow-contained member.
  for (const auto& orbit : orbits) {
    std::vector<std::size_t> cls;
    for (const Subgroup& s : orbit) cls.push_back(index_.at(s.members()));
    std::sort(cls.begin(), cls.end());
    const std::size_t rep = index_.at(orbit.front().members());
    std::rotate(cls.begin(), std::find(cls.begin(), cls.end(), rep), std::find(cls.begin(), cls.end(), rep) + 1);
    for (std::size_t i : cls) class_of_[i] = classes_.size();
    classes_.push_back(std::move(cls));
  }
  for (const Subgroup& s : local) sylow_subgroups_.push_back(index_.at(s.members()));
}

std::optional<std::size_t> PSubgroupLattice::index_of(const std::vector<Element>& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PSubgroupLattice::class_of(const Subgroup& h) const {
  auto idx = index_of(h.members());
  if (!idx) throw Error(ErrorKind::DomainMismatch, "not a p-subgroup of this lattice");
  return class_of_[*idx];
}

const PSubgroupLattice::SylowPairs& PSubgroupLattice::sylow_pairs() const {
  std::call_once(pairs_once_, [this] {
    auto sp = std::make_unique<SylowPairs>();
    sp->pairs = normal_pairs_with_tag(sylow_);
    for (const auto& s : sp->pairs.subgroups) sp->class_of.push_back(class_of(s));
    pairs_ = std::move(sp);
  });
  return *pairs_;
}

std::string to_string(const QuotientTag& tag) {
  switch (tag.kind) {
    case QuotientKind::ElementaryAbelianRank2: return "ElementaryAbelianRank2";
    case QuotientKind::CyclicP: return "CyclicP";
    case QuotientKind::Cyclic4: return "Cyclic4";
    case QuotientKind::GeneralizedQuaternion: return "GeneralizedQuaternion(" + std::to_string(tag.order) + ")";
    case QuotientKind::Other: return "Other";
  }
  return "Other";
}

Quotient quotient(const Subgroup& h, const Subgroup& k) {
  const auto& grp = h.group();
  Quotient q;
  // identity coset first, whatever the member order
  std::vector<Element> order{grp.identity()};
  order.insert(order.end(), k.members().begin(), k.members().end());
  for (Element x : order) {
    if (q.coset_of.count(x)) continue;
    const std::size_t c = q.reps.size();
    q.reps.push_back(x);
    for (Element y : h.members()) q.coset_of[grp.mul(x, y)] = c;
  }
  const std::size_t n = q.reps.size();
  q.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) q.table[a * n + b] = q.coset_of.at(grp.mul(q.reps[a], q.reps[b]));
  return q;
}

namespace {

std::size_t quotient_order_of(const Quotient& q, std::size_t c) {
  const std::size_t n = q.order();
  std::size_t k = 1;
  for (std::size_t x = c; x != 0; x = q.table[x * n + c]) ++k;
  return k;
}

}  // namespace

QuotientTag classify_quotient(const Quotient& q, std::uint32_t p) {
  const std::size_t n = q.order();
  QuotientTag tag{QuotientKind::Other, n};
  bool abelian = true;
  for (std::size_t a = 0; a < n && abelian; ++a)
    for (std::size_t b = 0; b < n && abelian; ++b) abelian = q.table[a * n + b] == q.table[b * n + a];
  std::size_t involutions = 0, max_order = 1;
  for (std::size_t c = 1; c < n; ++c) {
    const std::size_t o = quotient_order_of(q, c);
    if (o == 2) ++involutions;
    max_order = std::max(max_order, o);
  }
  if (n == p) {
    tag.kind = QuotientKind::CyclicP;
  } else if (n == static_cast<std::size_t>(p) * p && abelian && max_order == p) {
    tag.kind = QuotientKind::ElementaryAbelianRank2;
  } else if (p == 2 && n == 4 && max_order == 4) {
    tag.kind = QuotientKind::Cyclic4;
  } else if (p == 2 && n >= 8 && fp::p_part(n, 2) == n && !abelian && involutions == 1) {
    tag.kind = QuotientKind::GeneralizedQuaternion;
  }
  return tag;
}

PGroupPairs normal_pairs_with_tag(const Subgroup& p_group) {
  const std::size_t order = p_group.order();
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; order > 1 && !p; ++d)
    if (order % d == 0) p = d;
  if (order > 1 && fp::p_part(order, p) != order)
    throw Error(ErrorKind::NotPGroup, "order " + std::to_string(order) + " is not a prime power");

  PGroupPairs out;
  out.subgroups = subgroups_of_p_group(p_group);
  if (order == 1) return out;
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) index[out.subgroups[i].members()] = i;

  const auto& subs = out.subgroups;
  for (std::size_t ki = 0; ki < subs.size(); ++ki) {
    for (std::size_t hi = 0; hi < subs.size(); ++hi) {
      const Subgroup& h = subs[hi];
      const Subgroup& k = subs[ki];
      if (h.order() >= k.order() || !k.contains(h)) continue;
      const std::size_t idx = k.order() / h.order();
      if (p != 2 && idx != p && idx != static_cast<std::size_t>(p) * p) continue;
      if (!is_normal_in(h, k)) continue;
      const Quotient q = quotient(h, k);
      NormalPair pair{hi, ki, classify_quotient(q, p), {}};
      auto preimage = [&](const std::vector<std::size_t>& cosets) {
        std::vector<Element> members;
        for (const auto& [x, c] : q.coset_of)
          if (std::find(cosets.begin(), cosets.end(), c) != cosets.end()) members.push_back(x);
        std::sort(members.begin(), members.end());
        return index.at(members);
      };
      const std::size_t n = q.order();
      if (pair.tag.kind == QuotientKind::ElementaryAbelianRank2) {
        std::set<std::vector<std::size_t>> lines;
        for (std::size_t c = 1; c < n; ++c) {
          std::vector<std::size_t> line{0};
          for (std::size_t x = c; x != 0; x = q.table[x * n + c]) line.push_back(x);
          std::sort(line.begin(), line.end());
          lines.insert(line);
        }
        for (const auto& line : lines) pair.between.push_back(preimage(line));
        std::sort(pair.between.begin(), pair.between.end());
      } else if (pair.tag.kind == QuotientKind::Cyclic4 || pair.tag.kind == QuotientKind::GeneralizedQuaternion) {
        for (std::size_t c = 1; c < n; ++c)
          if (q.table[c * n + c] == 0) pair.between.push_back(preimage({0, c}));
      }
      out.pairs.push_back(std::move(pair));
    }
  }
  return out;
}

}  // namespace qdp::group

#include "qdp/repchar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::repchar {

namespace {

std::uint32_t group_exponent(const group::FiniteGroup& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return static_cast<std::uint32_t>(e);
}

std::shared_ptr<const ConjugacyClasses> classes_of(const GroupPtr& g) {
  return std::make_shared<const ConjugacyClasses>(conjugacy_classes(*g));
}

std::uint32_t prime_of(std::size_t n) {
  for (std::uint32_t d = 2; d <= n; ++d)
    if (n % d == 0) return d;
  return 1;
}

}  // namespace

ConjugacyClasses conjugacy_classes(const group::FiniteGroup& g) {
  ConjugacyClasses out;
  const std::size_t none = g.order();
  out.class_of.assign(g.order(), none);
  for (Element x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != none) continue;
    std::set<Element> cls;
    for (Element y = 0; y < g.order(); ++y) cls.insert(g.conjugate(y, x));
    for (Element z : cls) out.class_of[z] = out.classes.size();
    out.classes.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

Character::Character(GroupPtr g, std::shared_ptr<const ConjugacyClasses> classes, std::vector<Cyclotomic> values)
    : group_(std::move(g)), classes_(std::move(classes)), values_(std::move(values)) {
  if (values_.size() != classes_->classes.size())
    throw Error(ErrorKind::ShapeMismatch, "one value per conjugacy class expected");
}

Character Character::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return Character(group_, classes_, std::move(v));
}

Character operator+(const Character& a, const Character& b) {
  if (a.group_ != b.group_) throw Error(ErrorKind::DomainMismatch, "characters of different groups");
  std::vector<Cyclotomic> v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Character(a.group_, a.classes_, std::move(v));
}

Character Character::scaled(std::int64_t k) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : values_) v.push_back(x.scaled(k));
  return Character(group_, classes_, std::move(v));
}

bool operator<(const Character& a, const Character& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.values_ < b.values_;
}

std::int64_t inner_product(const Character& a, const Character& b) {
  const auto& cls = a.classes().classes;
  Cyclotomic sum(a.cyclotomic_order());
  for (std::size_t c = 0; c < cls.size(); ++c)
    sum += (a.class_values()[c] * b.class_values()[c].conj()).scaled(static_cast<std::int64_t>(cls[c].size()));
  const auto n = static_cast<std::int64_t>(a.group()->order());
  if (!sum.is_integer() || sum.as_integer() % n != 0)
    throw Error(ErrorKind::NonIntegral, "inner product " + sum.to_string() + " / " + std::to_string(n));
  return sum.as_integer() / n;
}

Character trivial_character(const GroupPtr& g, std::shared_ptr<const ConjugacyClasses> classes) {
  if (!classes) classes = classes_of(g);
  const std::uint32_t e = group_exponent(*g);
  std::vector<Cyclotomic> v(classes->classes.size(), Cyclotomic::integer(e, 1));
  return Character(g, std::move(classes), std::move(v));
}

Character regular_character(const GroupPtr& g, std::shared_ptr<const ConjugacyClasses> classes) {
  if (!classes) classes = classes_of(g);
  const std::uint32_t e = group_exponent(*g);
  std::vector<Cyclotomic> v(classes->classes.size(), Cyclotomic(e));
  v[classes->class_of[g->identity()]] = Cyclotomic::integer(e, static_cast<std::int64_t>(g->order()));
  return Character(g, std::move(classes), std::move(v));
}

std::vector<std::vector<std::uint32_t>> linear_characters(const group::Subgroup& h, std::uint32_t e) {
  const auto& g = h.group();
  const auto& members = h.members();
  const std::size_t n = members.size();
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[members[i]] = i;

  // Generating sequence of H chosen greedily.
  std::vector<Element> gens;
  {
    std::vector<char> in(n, 0);
    in[pos.at(g.identity())] = 1;
    std::vector<Element> closure{g.identity()};
    for (Element x : members) {
      if (in[pos.at(x)]) continue;
      gens.push_back(x);
      for (std::size_t i = 0; i < closure.size(); ++i)
        for (Element s : gens) {
          const Element y = g.mul(closure[i], s);
          if (!in[pos.at(y)]) {
            in[pos.at(y)] = 1;
            closure.push_back(y);
          }
        }
    }
  }

  const std::uint32_t unset = e;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> images;
  // Extends the homomorphism defined on the first images.size() generators;
  // fails when some element receives two different values.
  auto extend = [&](std::vector<std::uint32_t>& value) {
    value.assign(n, unset);
    value[pos.at(g.identity())] = 0;
    std::vector<Element> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element x = queue[i];
      const std::uint32_t vx = value[pos.at(x)];
      for (std::size_t j = 0; j < images.size(); ++j) {
        const Element y = g.mul(x, gens[j]);
        const std::uint32_t vy = (vx + images[j]) % e;
        std::uint32_t& slot = value[pos.at(y)];
        if (slot == unset) {
          slot = vy;
          queue.push_back(y);
        } else if (slot != vy) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<std::uint32_t> value;
  auto search = [&](auto&& self) -> void {
    if (!extend(value)) return;
    if (images.size() == gens.size()) {
      out.push_back(value);
      return;
    }
    const std::size_t ord = g.element_order(gens[images.size()]);
    const std::uint32_t step = static_cast<std::uint32_t>(e / ord);
    for (std::uint32_t k = 0; k < e; k += step) {
      images.push_back(k);
      self(self);
      images.pop_back();
    }
  };
  search(search);
  return out;
}

std::vector<Character> irreducible_characters(const GroupPtr& p_group) {
  const std::size_t order = p_group->order();
  const std::uint32_t p = prime_of(order);
  if (order > 1 && fp::p_part(order, p) != order)
    throw Error(ErrorKind::NotPGroup, p_group->name() + " has order " + std::to_string(order));
  const auto classes = classes_of(p_group);
  const std::uint32_t e = group_exponent(*p_group);
  if (order == 1) return {trivial_character(p_group, classes)};

  const auto whole = group::whole_group(p_group);
  std::vector<group::Subgroup> subs = group::subgroups_of_p_group(whole);
  // Larger subgroups first: small-degree characters appear early.
  std::reverse(subs.begin(), subs.end());

  std::set<Character> found;
  std::size_t degree_sq = 0;
  for (const auto& h : subs) {
    if (degree_sq == order) break;
    // Left transversal of H.
    std::vector<Element> transversal;
    {
      std::vector<char> covered(order, 0);
      for (Element t = 0; t < order; ++t) {
        if (covered[t]) continue;
        transversal.push_back(t);
        for (Element x : h.members()) covered[p_group->mul(t, x)] = 1;
      }
    }
    std::map<Element, std::size_t> hpos;
    for (std::size_t i = 0; i < h.order(); ++i) hpos[h.members()[i]] = i;
    for (const auto& lambda : linear_characters(h, e)) {
      std::vector<Cyclotomic> values;
      values.reserve(classes->classes.size());
      for (const auto& cls : classes->classes) {
        const Element g = cls.front();
        Cyclotomic v(e);
        for (Element t : transversal) {
          const Element c = p_group->mul(p_group->mul(p_group->inverse(t), g), t);
          auto it = hpos.find(c);
          if (it != hpos.end()) v += Cyclotomic::root(e, lambda[it->second]);
        }
        values.push_back(std::move(v));
      }
      Character chi(p_group, classes, std::move(values));
      if (found.count(chi) || inner_product(chi, chi) != 1) continue;
      degree_sq += static_cast<std::size_t>(chi.degree() * chi.degree());
      found.insert(std::move(chi));
      if (degree_sq == order) break;
    }
  }
  std::vector<Character> out(found.begin(), found.end());
  if (degree_sq != order)
    throw Error(ErrorKind::IncompleteInduction, "sum of squared degrees " + std::to_string(degree_sq) +
                                                    " != " + std::to_string(order));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (inner_product(out[i], out[j]) != 0)
        throw Error(ErrorKind::IncompleteInduction, "characters are not orthogonal");
  return out;
}

int frobenius_schur(const Character& chi) {
  const auto& g = *chi.group();
  Cyclotomic sum(chi.cyclotomic_order());
  for (Element x = 0; x < g.order(); ++x) sum += chi(g.mul(x, x));
  const auto n = static_cast<std::int64_t>(g.order());
  if (!sum.is_integer() || sum.as_integer() % n != 0)
    throw Error(ErrorKind::NonIntegral, "Frobenius-Schur indicator is not an integer");
  return static_cast<int>(sum.as_integer() / n);
}

std::int64_t fixed_dimension(const Character& chi, const group::Subgroup& h) {
  if (h.group().order() != chi.group()->order())
    throw Error(ErrorKind::DomainMismatch, "subgroup does not live in the character's group");
  Cyclotomic sum(chi.cyclotomic_order());
  for (Element x : h.members()) sum += chi(x);
  const auto n = static_cast<std::int64_t>(h.order());
  if (!sum.is_integer() || sum.as_integer() % n != 0)
    throw Error(ErrorKind::NonIntegral, "average " + sum.to_string() + " / " + std::to_string(n));
  return sum.as_integer() / n;
}

std::string to_string(RealType t) {
  switch (t) {
    case RealType::Real: return "real";
    case RealType::ComplexPair: return "complex-pair";
    case RealType::Quaternionic: return "quaternionic";
  }
  return "real";
}

RealRepresentationBasis real_representation_basis(const GroupPtr& g, const std::vector<Character>& irreducibles) {
  RealRepresentationBasis basis{g, {}};
  for (const auto& chi : irreducibles) {
    switch (frobenius_schur(chi)) {
      case 1: basis.entries.push_back({chi, RealType::Real, 1}); break;
      case -1: basis.entries.push_back({chi, RealType::Quaternionic, 2}); break;
      default:
        // keep the canonically smaller member of each conjugate pair
        if (chi < chi.conj()) basis.entries.push_back({chi, RealType::ComplexPair, 2});
        break;
    }
  }
  return basis;
}

RealRepresentationBasis real_representation_basis(const GroupPtr& p_group) {
  return real_representation_basis(p_group, irreducible_characters(p_group));
}

dimfun::SuperClassFunction real_dimension_function(const RealBasisEntry& entry, const dimfun::LatticePtr& lattice) {
  if (lattice->group() != entry.character.group())
    throw Error(ErrorKind::DomainMismatch, "lattice and character live on different groups");
  std::vector<std::int64_t> values;
  for (std::size_t c = 0; c < lattice->class_count(); ++c)
    values.push_back(entry.multiplier * fixed_dimension(entry.character, lattice->representative(c)));
  return dimfun::SuperClassFunction(lattice, std::move(values));
}

}  // namespace qdp::repchar

#include "qdp/dimfun.hpp"

#include <algorithm>
#include <set>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::dimfun {

BorelSmithReport check_borel_smith(const SuperClassFunction& tau) {
  const auto& lattice = *tau.lattice();
  const auto& sp = lattice.sylow_pairs();
  const auto& subs = sp.pairs.subgroups;
  const std::uint32_t p = lattice.prime();
  auto val = [&](std::size_t i) { return tau.value(sp.class_of[i]); };

  BorelSmithReport report;
  report.monotone = is_monotone(tau).monotone;
  for (const auto& pair : sp.pairs.pairs) {
    const std::int64_t th = val(pair.h), tk = val(pair.k);
    switch (pair.tag.kind) {
      case group::QuotientKind::ElementaryAbelianRank2: {
        ++report.pairs_checked;
        std::int64_t rhs = 0;
        for (std::size_t hi : pair.between) rhs += val(hi) - tk;
        if (th - tk != rhs)
          report.violations.push_back({"i", {subs[pair.h].members(), subs[pair.k].members()}, th - tk, rhs});
        break;
      }
      case group::QuotientKind::CyclicP:
        if (p > 2) {
          ++report.pairs_checked;
          if ((th - tk) % 2 != 0)
            report.violations.push_back({"ii", {subs[pair.h].members(), subs[pair.k].members()}, th - tk, 2});
        }
        break;
      case group::QuotientKind::Cyclic4:
      case group::QuotientKind::GeneralizedQuaternion: {
        ++report.pairs_checked;
        const std::int64_t modulus = pair.tag.kind == group::QuotientKind::Cyclic4 ? 2 : 4;
        for (std::size_t li : pair.between) {
          const std::int64_t diff = th - val(li);
          if (diff % modulus != 0)
            report.violations.push_back(
                {"iii", {subs[pair.h].members(), subs[li].members(), subs[pair.k].members()}, diff, modulus});
        }
        break;
      }
      case group::QuotientKind::Other: break;
    }
  }
  return report;
}

MonotoneResult is_monotone(const SuperClassFunction& tau) {
  const auto& lattice = *tau.lattice();
  const auto& subs = lattice.subgroups();
  for (std::size_t ki = 0; ki < subs.size(); ++ki)
    for (std::size_t hi = 0; hi < subs.size(); ++hi) {
      if (subs[hi].order() >= subs[ki].order() || !subs[ki].contains(subs[hi])) continue;
      if (tau.value(lattice.class_of(ki)) > tau.value(lattice.class_of(hi)))
        return {false, std::make_pair(subs[hi].members(), subs[ki].members())};
    }
  return {};
}

SuperClassFunction join_dimension_function(const SuperClassFunction& tau, std::int64_t m) {
  if (m <= 0) throw Error(ErrorKind::DomainMismatch, "join multiplicity must be positive");
  std::vector<std::int64_t> values = tau.values();
  for (auto& v : values) v *= m;
  return SuperClassFunction(tau.lattice(), std::move(values), tau.scale() * m);
}

CodimOneResult check_codim_one_sum(const SuperClassFunction& tau, const group::Subgroup& v) {
  const auto& lattice = *tau.lattice();
  const std::uint32_t p = lattice.prime();
  const std::size_t pp = static_cast<std::size_t>(p) * p;
  if (v.order() != pp || group::exponent(v) != p || group::center(v).order() != pp)
    throw Error(ErrorKind::DomainMismatch, "V must be elementary abelian of rank two");
  const auto lines = group::cyclic_subgroups(v);
  CodimOneResult out;
  const std::int64_t t1 = tau.at(group::trivial_subgroup(v.parent()));
  const std::int64_t tv = tau.at(v);
  out.lhs = t1 - tv;
  for (const auto& w : lines) {
    if (w.order() != p) continue;
    const std::int64_t d = tau.at(w) - tv;
    out.rhs += d;
    out.euler.factor_degrees[lattice.class_of(w)] += d;
  }
  out.euler.degree = out.lhs;
  out.holds = out.lhs == out.rhs;
  return out;
}

std::optional<std::int64_t> smallest_passing_multiple(const SuperClassFunction& tau, std::int64_t max_m) {
  for (std::int64_t m = 1; m <= max_m; ++m)
    if (check_borel_smith(join_dimension_function(tau, m)).passes()) return m;
  return std::nullopt;
}

std::vector<std::size_t> Realization::multiset() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    for (std::int64_t k = 0; k < coefficients[i]; ++k) out.push_back(i);
  return out;
}

SuperClassFunction combine(const LatticePtr& lattice, const repchar::RealRepresentationBasis& basis,
                           const std::vector<std::int64_t>& coefficients) {
  if (coefficients.size() != basis.entries.size())
    throw Error(ErrorKind::ShapeMismatch, "one coefficient per basis entry expected");
  SuperClassFunction sum = SuperClassFunction::constant(lattice, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) sum += repchar::real_dimension_function(basis.entries[i], lattice).scaled(coefficients[i]);
  return sum;
}

std::optional<Realization> realize_as_representation(const SuperClassFunction& tau,
                                                     const repchar::RealRepresentationBasis& basis) {
  const auto& lattice = tau.lattice();
  if (lattice->group() != basis.group)
    throw Error(ErrorKind::DomainMismatch, "basis and function live on different groups");
  if (lattice->sylow().order() != lattice->group()->order())
    throw Error(ErrorKind::NotPGroup, "realization needs a p-group");
  if (auto mono = is_monotone(tau); !mono.monotone) throw Error(ErrorKind::NotMonotone, "function is not monotone");
  if (!check_borel_smith(tau).passes()) throw Error(ErrorKind::NotBorelSmith, "function fails Borel-Smith conditions");

  const std::size_t nb = basis.entries.size(), nc = lattice->class_count();
  std::vector<std::vector<std::int64_t>> dims;
  for (const auto& entry : basis.entries) dims.push_back(repchar::real_dimension_function(entry, lattice).values());

  // Duplicate dimension vectors are interchangeable; search only the first.
  std::vector<std::size_t> vars;
  {
    std::set<std::vector<std::int64_t>> seen;
    for (std::size_t i = 0; i < nb; ++i)
      if (seen.insert(dims[i]).second) vars.push_back(i);
  }
  const std::size_t trivial_class = lattice->class_of(group::trivial_subgroup(lattice->group()));

  struct State {
    std::vector<std::int64_t> residual;
    std::vector<std::int64_t> coeff;  // -1 = undecided
  };
  Realization result;
  result.coefficients.assign(nb, 0);

  // Classes whose residual only one undecided variable can still reduce fix
  // that variable.
  auto propagate = [&](State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < nc; ++c) {
        if (s.residual[c] < 0) return false;
        std::size_t contributors = 0, last = 0;
        for (std::size_t v = 0; v < vars.size(); ++v)
          if (s.coeff[v] < 0 && dims[vars[v]][c] > 0) {
            ++contributors;
            last = v;
          }
        if (contributors == 0) {
          if (s.residual[c] != 0) return false;
          continue;
        }
        if (contributors == 1) {
          const std::int64_t d = dims[vars[last]][c];
          if (s.residual[c] % d != 0) return false;
          const std::int64_t a = s.residual[c] / d;
          s.coeff[last] = a;
          for (std::size_t k = 0; k < nc; ++k) s.residual[k] -= a * dims[vars[last]][k];
          changed = true;
        }
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, State s) -> bool {
    ++result.nodes;
    if (!propagate(s)) return false;
    std::size_t pick = vars.size();
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (s.coeff[v] < 0) {
        pick = v;
        break;
      }
    if (pick == vars.size()) {
      for (auto r : s.residual)
        if (r != 0) return false;
      for (std::size_t v = 0; v < vars.size(); ++v) result.coefficients[vars[v]] = s.coeff[v];
      return true;
    }
    const std::int64_t deg = dims[vars[pick]][trivial_class];
    const std::int64_t bound = deg > 0 ? s.residual[trivial_class] / deg : 0;
    for (std::int64_t a = bound; a >= 0; --a) {
      State next = s;
      next.coeff[pick] = a;
      for (std::size_t k = 0; k < nc; ++k) next.residual[k] -= a * dims[vars[pick]][k];
      if (self(self, std::move(next))) return true;
    }
    return false;
  };

  State start{tau.values(), std::vector<std::int64_t>(vars.size(), -1)};
  if (!dfs(dfs, std::move(start))) return std::nullopt;
  return result;
}

std::int64_t lefschetz_number(std::int64_t n, const IntMatrix& h0, const IntMatrix& hn, const IntMatrix& h2n) {
  auto trace = [](const IntMatrix& m, std::size_t size, const char* what) {
    if (m.size() != size) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " has the wrong size");
    std::int64_t t = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if (m[i].size() != size) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " is not square");
      t += m[i][i];
    }
    return t;
  };
  if (n < 1) throw Error(ErrorKind::DomainMismatch, "sphere dimension must be positive");
  const std::int64_t t0 = trace(h0, 1, "H^0 action");
  const std::int64_t tn = trace(hn, 2, "H^n action");
  const std::int64_t t2n = trace(h2n, 1, "H^2n action");
  return t0 + (n % 2 == 0 ? tn : -tn) + t2n;
}

GenerationResult generation_by_order_p(const group::GroupPtr& g, std::uint32_t p) {
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  GenerationResult out;
  std::vector<char> in(g->order(), 0);
  std::vector<Element> closure{g->identity()};
  in[g->identity()] = 1;
  for (Element x = 0; x < g->order(); ++x) {
    if (in[x] || g->element_order(x) != p) continue;
    out.witnesses.push_back(x);
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (Element s : out.witnesses) {
        const Element y = g->mul(closure[i], s);
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
  }
  out.closure_order = closure.size();
  out.generated = closure.size() == g->order();
  return out;
}

}  // namespace qdp::dimfun

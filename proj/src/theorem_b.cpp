#include "qdp/theorem_b.hpp"

#include <map>
#include <set>

#include "qdp/dimfun.hpp"
#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::dimfun {

namespace {

std::string class_name(const group::PSubgroupLattice& lattice, std::size_t c) {
  return "c" + std::to_string(c) + "[order " + std::to_string(lattice.representative(c).order()) + "]";
}

// Merge terms on the same variable and drop zeros.
std::vector<IntSolver::Term> collect(const std::map<std::size_t, std::int64_t>& coeffs) {
  std::vector<IntSolver::Term> out;
  for (const auto& [v, c] : coeffs)
    if (c != 0) out.push_back({v, c});
  return out;
}

}  // namespace

IntSolver effective_dimension_system(const group::PSubgroupLattice& lattice, std::int64_t bound) {
  IntSolver solver;
  for (std::size_t c = 0; c < lattice.class_count(); ++c) solver.add_variable("tau" + class_name(lattice, c), 0, bound);

  const auto& subs = lattice.subgroups();
  const auto& local = lattice.sylow_subgroups();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t hi : local)
    for (std::size_t ki : local) {
      if (subs[hi].order() >= subs[ki].order() || !subs[ki].contains(subs[hi])) continue;
      const std::size_t ch = lattice.class_of(hi), ck = lattice.class_of(ki);
      if (!seen.insert({ch, ck}).second) continue;
      solver.add_le(collect({{ck, 1}, {ch, -1}}), 0,
                    "monotone " + class_name(lattice, ch) + " < " + class_name(lattice, ck));
    }

  const auto& sp = lattice.sylow_pairs();
  const std::uint32_t p = lattice.prime();
  std::set<std::vector<IntSolver::Term>> seen_eq;
  for (const auto& pair : sp.pairs.pairs) {
    const std::size_t ch = sp.class_of[pair.h], ck = sp.class_of[pair.k];
    const std::string where = "(" + class_name(lattice, ch) + ", " + class_name(lattice, ck) + ")";
    if (pair.tag.kind == group::QuotientKind::ElementaryAbelianRank2) {
      std::map<std::size_t, std::int64_t> coeffs;
      coeffs[ch] += 1;
      coeffs[ck] -= 1;
      for (std::size_t b : pair.between) {
        coeffs[sp.class_of[b]] -= 1;
        coeffs[ck] += 1;
      }
      auto terms = collect(coeffs);
      if (!terms.empty() && seen_eq.insert(terms).second) solver.add_eq(terms, 0, "borel-smith (i) " + where);
    } else if (pair.tag.kind == group::QuotientKind::CyclicP && p > 2) {
      auto terms = collect({{ch, 1}, {ck, -1}});
      if (!terms.empty()) solver.add_even(terms, 0, "borel-smith (ii) " + where);
    } else if (pair.tag.kind == group::QuotientKind::Cyclic4 ||
               pair.tag.kind == group::QuotientKind::GeneralizedQuaternion) {
      // only the mod-2 part is linear; divisibility by 4 is checked afterwards
      for (std::size_t b : pair.between) {
        auto terms = collect({{ch, 1}, {sp.class_of[b], -1}});
        if (!terms.empty()) solver.add_even(terms, 0, "borel-smith (iii) " + where);
      }
    }
  }

  const group::Subgroup z = group::center(lattice.sylow());
  const std::size_t cz = lattice.class_of(z);
  solver.add_le({{cz, 1}}, 0, "effective: tau vanishes on Z(P) " + class_name(lattice, cz));
  std::set<std::size_t> positive;
  for (const auto& c : group::cyclic_subgroups(lattice.sylow())) {
    if (c.order() == 1 || c == z) continue;
    const std::size_t cc = lattice.class_of(c);
    if (positive.insert(cc).second)
      solver.add_le({{cc, -1}}, -1, "effective: tau positive on cyclic " + class_name(lattice, cc));
  }
  return solver;
}

TheoremBCertificate qdp_obstruction_theorem_B(std::uint32_t p, std::size_t size_guard) {
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorKind::EvenPrime, "the obstruction needs an odd prime");
  TheoremBCertificate cert;
  cert.p = p;
  const group::GroupPtr g = group::construct_qdp(p, size_guard);
  const LatticePtr lattice = make_lattice(g, p, size_guard);
  const group::Subgroup& sylow = lattice->sylow();
  const group::Subgroup z = group::center(sylow);
  cert.group_order = g->order();
  cert.sylow_order = sylow.order();
  cert.center = z.members();

  {
    const bool shape = sylow.order() == fp::p_part(g->order(), p) && z.order() == p && group::exponent(sylow) == p;
    cert.legs.push_back({"sylow-center", shape ? LegStatus::Verified : LegStatus::Refuted,
                         "|P| = " + std::to_string(sylow.order()) + ", |Z(P)| = " + std::to_string(z.order()) +
                             ", exponent " + std::to_string(group::exponent(sylow))});
  }

  // First non-central cyclic subgroup of P, in canonical order, that is
  // G-conjugate to Z(P).
  bool found = false;
  for (const auto& c : group::cyclic_subgroups(sylow)) {
    if (c.order() != p || c == z) continue;
    if (auto w = group::is_conjugate(z, c)) {
      cert.noncentral = c.members();
      cert.witness = *w;
      cert.witness_label = g->describe(*w);
      cert.witness_count = group::conjugating_elements(z, c).size();
      found = true;
      break;
    }
  }
  if (found) {
    const group::Subgroup c(g, cert.noncentral);
    const bool ok = group::conjugate(z, cert.witness) == c;
    cert.legs.push_back({"fusion-witness", ok ? LegStatus::Verified : LegStatus::Refuted,
                         "g = " + cert.witness_label + " conjugates Z(P) onto a non-central subgroup; " +
                             std::to_string(cert.witness_count) + " such g"});
  } else {
    cert.legs.push_back({"fusion-witness", LegStatus::Refuted, "Z(P) is not fused with any non-central subgroup"});
  }
  cert.fusion_forces_equality =
      found && lattice->class_of(z) == lattice->class_of(group::Subgroup(g, cert.noncentral));

  cert.legs.push_back({"effective-euler-class", LegStatus::Assumed,
                       "an effective Euler class gives a dimension function vanishing on a cyclic subgroup of P "
                       "exactly when it is Z(P); joins keep the class effective"});
  cert.legs.push_back({"borel-smith-after-join", LegStatus::Assumed,
                       "after enough fiber joins the restriction to P is a monotone Borel-Smith function"});

  const std::int64_t bound = 2 * static_cast<std::int64_t>(p);
  const IntSolver system = effective_dimension_system(*lattice, bound);
  const IntSolver::Result res = system.solve();
  cert.variables = system.variable_count();
  cert.constraints = system.constraints().size();
  cert.unsat = !res.satisfiable;
  cert.refuted_by_propagation = res.refuted_by_propagation;
  cert.conflict = res.conflict;
  cert.search_nodes = res.nodes;
  {
    std::string detail = std::to_string(cert.variables) + " class variables, " + std::to_string(cert.constraints) +
                         " constraints: ";
    detail += cert.unsat ? (cert.refuted_by_propagation ? "refuted by propagation" : "refuted by exhaustive search")
                         : "a solution exists";
    cert.legs.push_back({"constraints-unsat", cert.unsat ? LegStatus::Verified : LegStatus::Refuted, detail});
  }

  // The control system sees only P-conjugacy; it must be satisfiable.
  const auto standalone = group::as_group(sylow);
  const LatticePtr plattice = make_lattice(standalone.group, p, size_guard);
  const IntSolver control = effective_dimension_system(*plattice, bound);
  const IntSolver::Result cres = control.solve();
  cert.control_sat = cres.satisfiable;
  cert.control_solution = cres.solution;
  for (std::size_t c = 0; c < plattice->class_count(); ++c) cert.control_classes.push_back(class_name(*plattice, c));
  if (cert.control_sat) {
    const SuperClassFunction tau(plattice, cres.solution);
    const auto basis = repchar::real_representation_basis(standalone.group);
    if (auto r = realize_as_representation(tau, basis)) cert.control_realized = combine(plattice, basis, r->coefficients) == tau;
  }
  cert.legs.push_back({"control-without-fusion",
                       cert.control_sat && cert.control_realized ? LegStatus::Verified : LegStatus::Refuted,
                       cert.control_sat ? "P-classes alone admit a solution, realized by a real representation of P"
                                        : "P-classes alone admit no solution"});

  cert.methods_agree = cert.unsat == cert.fusion_forces_equality;
  cert.legs.push_back({"methods-agree", cert.methods_agree ? LegStatus::Verified : LegStatus::Refuted,
                       "constraint refutation and conjugacy shortcut give the same verdict"});
  return cert;
}

}  // namespace qdp::dimfun

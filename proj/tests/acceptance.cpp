// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qdp/dimfun.hpp"
#include "qdp/fixloc.hpp"
#include "qdp/graded.hpp"
#include "qdp/repchar.hpp"
#include "qdp/theorem_b.hpp"
#include "qdp/theorem_c.hpp"
#include "support.hpp"

using namespace qdp;
using steenrod::GradedElement;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

// limit_s <= 0 means no time limit
void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = out.ok;
  std::string timing = std::to_string(secs).substr(0, 6) + " s";
  if (limit_s > 0) {
    timing += " (limit " + std::to_string(static_cast<int>(limit_s)) + " s)";
    if (secs >= limit_s) ok = false;
  }
  if (!ok) ++failures;
  std::printf("[%s] %2d %-44s %s; %s\n", ok ? "PASS" : "FAIL", id, name, out.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

std::string count(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

}  // namespace

int main() {
  criterion(1, "P^1(zeta) = 0, P^1(xi) = zeta^(p-1)", 1.0, [] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u}) {
      const auto inv = steenrod::invariants(p);
      const bool a = steenrod::steenrod_power(1, inv.zeta).is_zero();
      const bool b = steenrod::steenrod_power(1, inv.xi) == inv.zeta.pow(p - 1);
      o.ok = o.ok && a && b;
      o.detail += "p=" + std::to_string(p) + (a && b ? " exact " : " MISMATCH ");
    }
    return o;
  });

  criterion(2, "beta(uv g) = (xv - uy) g, 20 random g", 0, [] {
    test::Rng rng(20240601);
    const std::uint32_t budget = steenrod::kDefaultDegreeBudget;
    std::size_t good = 0;
    for (int i = 0; i < 20; ++i) {
      const std::uint32_t p = i % 2 ? 5 : 3;
      // uv g stays within the degree budget
      const auto g = test::random_polynomial(rng, p, test::random_degree(rng, budget - 2, false), 6);
      const auto u = GradedElement::u(p), v = GradedElement::v(p), x = GradedElement::x(p), y = GradedElement::y(p);
      good += steenrod::bockstein(u * v * g) == (x * v - u * y) * g;
    }
    return Outcome{good == 20, count(good, 20) + " exact"};
  });

  criterion(3, "zeta-power survivors", 10.0, [] {
    struct Case {
      std::uint32_t p, k;
      std::vector<std::string> want;
    };
    const std::vector<Case> cases{{3, 4, {"zeta"}}, {3, 6, {}}, {3, 8, {"zeta^2"}}, {3, 12, {"zeta^3"}}, {5, 6, {"zeta"}}};
    Outcome o;
    for (const auto& c : cases) {
      const auto r = steenrod::brute_force_zeta_proposition(c.p, c.k);
      const bool ok = !r.budget_limited && r.survivor_labels == c.want;
      o.ok = o.ok && ok;
      o.detail += "(" + std::to_string(c.p) + "," + std::to_string(c.k) + ")" + (ok ? "ok " : "BAD ");
    }
    return o;
  });

  criterion(4, "Qd(p) obstruction certificates p=3,5", 60.0, [] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u}) {
      const auto c = dimfun::qdp_obstruction_theorem_B(p);
      const auto g = group::construct_qdp(p);
      std::vector<group::Element> img;
      for (auto z : c.center) img.push_back(g->conjugate(c.witness, z));
      std::sort(img.begin(), img.end());
      const bool witness = c.witness_count > 0 && img == c.noncentral;
      const bool ok = witness && c.unsat && c.methods_agree && c.status() == LegStatus::Verified;
      o.ok = o.ok && ok;
      o.detail += "p=" + std::to_string(p) + (ok ? " witness+unsat+agree " : " INCOMPLETE ");
    }
    return o;
  });

  criterion(5, "free-action certificate p=3, Lefschetz 3 and 1", 0, [] {
    const auto c = steenrod::theorem_C_driver(3);
    bool legs = true;
    for (const auto& l : c.legs) legs = legs && (l.status == LegStatus::Verified || l.status == LegStatus::Assumed);
    std::size_t verified = 0;
    for (const auto& l : c.legs) verified += l.status == LegStatus::Verified;
    const bool lf = c.lefschetz.nontrivial_odd == 3 && c.lefschetz.nontrivial_even == 1;
    return Outcome{legs && lf && c.status() == LegStatus::Verified,
                   std::to_string(verified) + " computed legs verified, L=" + std::to_string(c.lefschetz.nontrivial_odd) +
                       "/" + std::to_string(c.lefschetz.nontrivial_even)};
  });

  criterion(6, "Borel-Smith contains representations", 0, [] {
    using namespace qdp::group;
    const std::vector<GroupPtr> corpus{
        cyclic(2),          cyclic(4),          elementary_abelian(2, 2), cyclic(8),
        direct_product(cyclic(4), cyclic(2)), elementary_abelian(2, 3), dihedral(8),  generalized_quaternion(8),
        cyclic(16),         dihedral(16),       generalized_quaternion(16), semidihedral(16),
        modular_2group(16), elementary_abelian(2, 4), cyclic(3),  cyclic(9),
        elementary_abelian(3, 2), cyclic(27), direct_product(cyclic(9), cyclic(3)), elementary_abelian(3, 3),
        heisenberg(3),      cyclic(5),          cyclic(25),         elementary_abelian(5, 2),
        cyclic(7),          cyclic(11),         cyclic(13),         cyclic(23)};
    std::size_t pairs = 0, good = 0;
    for (const auto& g : corpus) {
      std::uint32_t p = 2;
      while (g->order() % p) ++p;
      const auto lat = dimfun::make_lattice(g, p);
      for (const auto& e : repchar::real_representation_basis(g).entries) {
        ++pairs;
        good += dimfun::check_borel_smith(repchar::real_dimension_function(e, lat)).violations.empty();
      }
    }
    return Outcome{good == pairs && pairs >= 50, count(good, pairs) + " pairs over " + std::to_string(corpus.size()) + " groups"};
  });

  criterion(7, "realization round-trip", 0, [] {
    test::Rng rng(777);
    std::size_t good = 0, total = 0;
    for (const auto& g : {group::elementary_abelian(3, 2), group::heisenberg(3)}) {
      const auto lat = dimfun::make_lattice(g, 3);
      const auto basis = repchar::real_representation_basis(g);
      for (int i = 0; i < 20; ++i) {
        ++total;
        std::vector<std::int64_t> coeff;
        for (std::size_t j = 0; j < basis.entries.size(); ++j) coeff.push_back(rng.uniform(0, 2));
        const auto tau = dimfun::combine(lat, basis, coeff);
        if (!dimfun::is_monotone(tau).monotone || !dimfun::check_borel_smith(tau).passes()) continue;
        const auto r = dimfun::realize_as_representation(tau, basis);
        if (!r) continue;
        bool nonneg = true;
        for (auto c : r->coefficients) nonneg = nonneg && c >= 0;
        good += nonneg && dimfun::combine(lat, basis, r->coefficients) == tau;
      }
    }
    return Outcome{good == total, count(good, total) + " on (Z/3)^2 and 3^(1+2)"};
  });

  criterion(8, "fix-rank families", 0, [] {
    using namespace qdp::fixloc;
    std::size_t nonsplit = 0, nonsplit_ok = 0, triv = 0, triv_ok = 0, joins = 0, joins_ok = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
      for (std::uint32_t n = 0; n <= 10; ++n) {
        if (p == 2 || n % 2 == 1)
          for (std::uint32_t l = 1; l < p; ++l) {
            ++nonsplit;
            nonsplit_ok += fix_rank(TwoRowModule::nonsplit(p, n, l)).rank == -1;
          }
        const auto m = TwoRowModule::trivial(p, n);
        const auto r = fix_rank(m);
        ++triv;
        triv_ok += r.rank == static_cast<int>(n) && r.witness && verify_witness(m, *r.witness, r.checked_ops);
      }
    // S(R+L): P^1 U = (P^1 e / e) U with e = t, fixed set S^0
    const std::uint32_t p = 3;
    const auto e = GradedElement::t(p);
    const auto ratio = steenrod::steenrod_power(1, e);  // t^3 = t^2 * e
    LocalElement want_p1(p), want_witness(p);
    want_p1.add({static_cast<std::int64_t>(ratio.terms().begin()->first.a) - 1, 0, Gen::Fiber}, 1);
    want_witness.add({-1, 0, Gen::Fiber}, 1);
    const auto srl = TwoRowModule::representation_sphere(p, 1, 1);
    const auto fr = fix_rank(srl);
    const bool srl_ok = srl.operation_on_fiber(1) == want_p1 && fr.rank == 0 && fr.witness == want_witness &&
                        verify_witness(srl, *fr.witness, fr.checked_ops);
    for (std::uint32_t m = 1; m <= 4; ++m) {
      ++joins;
      joins_ok += fix_rank(join_power(srl, m)).rank == static_cast<int>(m) * (fr.rank + 1) - 1;
    }
    const bool ok = nonsplit_ok == nonsplit && triv_ok == triv && srl_ok && joins_ok == joins;
    return Outcome{ok, "nonsplit " + count(nonsplit_ok, nonsplit) + ", trivial " + count(triv_ok, triv) +
                           ", S(R+L) rank " + std::to_string(fr.rank) + (srl_ok ? " (oracle ok)" : " (ORACLE MISMATCH)") +
                           ", joins " + count(joins_ok, joins)};
  });

  criterion(9, "Euler class of joins e(xi[m]) = e^m", 0, [] {
    const auto zeta = steenrod::invariants(3).zeta;
    std::size_t good = 0;
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const auto pw = fixloc::euler_join_power(zeta, m);
      GradedElement direct = GradedElement::constant(3, 1);
      for (std::uint32_t i = 0; i < m; ++i) direct = direct * zeta;
      const auto prod = fixloc::euler_join(std::vector<GradedElement>(m, zeta));
      // F_3[x,y] is a domain, so the lex-leading term of zeta^m is (-x^3 y)^m
      const bool lead = !pw.power.is_zero() && pw.power.terms().begin()->first == steenrod::Monomial{3 * m, m, 0, 0};
      good += pw.power == direct && prod == direct && !pw.nilpotent && lead;
    }
    return Outcome{good == 4, count(good, 4) + " exact, non-nilpotent"};
  });

  criterion(10, "algebra property suite, 1000 cases each", 30.0, [] {
    test::Rng rng(1000);
    const int n = 1000;
    int cartan = 0, instab = 0, beta2 = 0, hom = 0, comm = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t p = i % 2 ? 5 : 3;
      const auto a = test::random_homogeneous(rng, p, test::random_degree(rng, 16));
      const auto b = test::random_homogeneous(rng, p, test::random_degree(rng, 16));
      const auto k = static_cast<std::uint32_t>(rng.uniform(0, 6));
      GradedElement sum(p);
      for (std::uint32_t j = 0; j <= k; ++j) sum += steenrod::steenrod_power(j, a) * steenrod::steenrod_power(k - j, b);
      cartan += steenrod::steenrod_power(k, a * b) == sum;

      const auto basis = steenrod::monomials_of_degree(p, 2, test::random_degree(rng, 20));
      bool ok = true;
      if (!basis.empty()) {
        const auto mono = GradedElement::monomial(p, rng.pick(basis));
        const std::uint32_t d = mono.degree();
        ok = steenrod::steenrod_power(d / 2 + 1 + static_cast<std::uint32_t>(rng.uniform(0, 3)), mono).is_zero();
        if (d % 2 == 0) ok = ok && steenrod::steenrod_power(d / 2, mono) == mono.pow(p);
      }
      instab += ok;

      beta2 += steenrod::bockstein(steenrod::bockstein(a)).is_zero();

      const auto A = test::random_sl2(rng, p), B = test::random_sl2(rng, p);
      hom += steenrod::sl2_act(A, steenrod::sl2_act(B, a)) == steenrod::sl2_act(test::mat_mul(A, B, p), a);
      comm += steenrod::sl2_act(A, steenrod::bockstein(a)) == steenrod::bockstein(steenrod::sl2_act(A, a)) &&
              steenrod::sl2_act(A, steenrod::steenrod_power(k, a)) == steenrod::steenrod_power(k, steenrod::sl2_act(A, a));
    }
    const bool ok = cartan == n && instab == n && beta2 == n && hom == n && comm == n;
    auto c = [](int x) { return std::to_string(x); };
    return Outcome{ok, "cartan " + c(cartan) + ", instability " + c(instab) + ", beta^2 " + c(beta2) + ", sl2 hom " + c(hom) +
                           ", commutation " + c(comm) + " of " + c(n)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

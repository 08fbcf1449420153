#include <doctest.h>

#include <functional>

#include "qdp/dimfun.hpp"
#include "qdp/error.hpp"
#include "qdp/int_solver.hpp"
#include "qdp/theorem_b.hpp"
#include "support.hpp"

using namespace qdp;
using namespace qdp::dimfun;
using group::Subgroup;

namespace {

SuperClassFunction from_rule(const LatticePtr& lat, const std::function<std::int64_t(const Subgroup&)>& f) {
  std::vector<std::int64_t> v;
  for (std::size_t c = 0; c < lat->class_count(); ++c) v.push_back(f(lat->representative(c)));
  return SuperClassFunction(lat, v);
}

// regular representation: fixed dimension of H on R[G] is |G|/|H|
SuperClassFunction regular(const LatticePtr& lat) {
  const auto n = static_cast<std::int64_t>(lat->group()->order());
  return from_rule(lat, [n](const Subgroup& h) { return n / static_cast<std::int64_t>(h.order()); });
}

std::vector<SuperClassFunction> basis_functions(const LatticePtr& lat, const repchar::RealRepresentationBasis& b) {
  std::vector<SuperClassFunction> out;
  for (const auto& e : b.entries) out.push_back(repchar::real_dimension_function(e, lat));
  return out;
}

}  // namespace

TEST_CASE("constant functions pass Borel-Smith") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto lat = make_lattice(group::construct_qdp(p), p);
    for (std::int64_t c : {0, 1, 5}) CHECK(check_borel_smith(SuperClassFunction::constant(lat, c)).passes());
  }
}

TEST_CASE("condition (i) failure on (Z/3)^2") {
  const auto lat = make_lattice(group::elementary_abelian(3, 2), 3);
  const auto tau = from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 2 : 0; });
  const auto r = check_borel_smith(tau);
  REQUIRE_FALSE(r.passes());
  CHECK(r.violations.front().condition == "i");
  CHECK(r.violations.front().lhs == 2);
  CHECK(r.violations.front().rhs == 0);
}

TEST_CASE("regular representation passes and is monotone") {
  for (const auto& g : {group::elementary_abelian(3, 2), group::heisenberg(3), group::generalized_quaternion(8),
                        group::dihedral(8), group::cyclic(9)}) {
    const std::uint32_t p = g->order() % 2 == 0 ? 2 : 3;
    const auto lat = make_lattice(g, p);
    const auto tau = regular(lat);
    CHECK(check_borel_smith(tau).passes());
    CHECK(is_monotone(tau).monotone);
  }
}

TEST_CASE("monotonicity witness") {
  const auto z3 = group::cyclic(3);
  const auto lat = make_lattice(z3, 3);
  const auto tau = from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 0 : 1; });
  const auto m = is_monotone(tau);
  CHECK_FALSE(m.monotone);
  REQUIRE(m.witness);
  CHECK(m.witness->first.size() == 1);
  CHECK(m.witness->second.size() == 3);
  CHECK(is_monotone(SuperClassFunction::constant(lat, 4)).monotone);
}

TEST_CASE("realization examples on Z/3") {
  const auto z3 = group::cyclic(3);
  const auto lat = make_lattice(z3, 3);
  const auto basis = repchar::real_representation_basis(z3);
  auto degree_multiset = [&](const Realization& r) {
    std::vector<std::int64_t> d;
    for (auto i : r.multiset()) d.push_back(basis.entries[i].real_degree());
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto reg = realize_as_representation(regular(lat), basis);
  REQUIRE(reg);
  CHECK(degree_multiset(*reg) == std::vector<std::int64_t>{1, 2});
  const auto zero = realize_as_representation(SuperClassFunction::constant(lat, 0), basis);
  REQUIRE(zero);
  CHECK(zero->multiset().empty());
  const auto rot = realize_as_representation(from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 2 : 0; }), basis);
  REQUIRE(rot);
  REQUIRE(rot->multiset().size() == 1);
  CHECK(basis.entries[rot->multiset().front()].type == repchar::RealType::ComplexPair);
}

TEST_CASE("realize refuses non-monotone and non-Borel-Smith input") {
  const auto v = group::elementary_abelian(3, 2);
  const auto lat = make_lattice(v, 3);
  const auto basis = repchar::real_representation_basis(v);
  try {
    realize_as_representation(from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 2 : 0; }), basis);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBorelSmith);
  }
  try {
    realize_as_representation(from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 0 : 1; }), basis);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonotone);
  }
}

TEST_CASE("join dimension function") {
  const auto z3 = group::cyclic(3);
  const auto lat = make_lattice(z3, 3);
  // r = 1 everywhere, value r + 1 = 2; the double join has r = 3
  const auto two = join_dimension_function(SuperClassFunction::constant(lat, 2), 2);
  for (auto v : two.values()) CHECK(v == 4);
  const auto tau = from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 2 : 1; });
  CHECK(join_dimension_function(tau, 1) == tau);
  CHECK(join_dimension_function(tau, 3).values() == std::vector<std::int64_t>{6, 3});
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 4; ++n)
      CHECK(join_dimension_function(tau, m * n) == join_dimension_function(join_dimension_function(tau, m), n));
}

TEST_CASE("Borel-Smith set is closed under sums and joins") {
  test::Rng rng(2024);
  for (const auto& g : {group::elementary_abelian(3, 2), group::heisenberg(3), group::dihedral(8),
                        group::generalized_quaternion(8)}) {
    const std::uint32_t p = g->order() % 2 == 0 ? 2 : 3;
    const auto lat = make_lattice(g, p);
    const auto fs = basis_functions(lat, repchar::real_representation_basis(g));
    for (int trial = 0; trial < 25; ++trial) {
      const auto& a = rng.pick(fs);
      const auto& b = rng.pick(fs);
      CHECK(check_borel_smith(a + b).passes());
      CHECK(check_borel_smith(join_dimension_function(a, rng.uniform(1, 5))).passes());
      CHECK(check_borel_smith(a.scaled(rng.uniform(0, 4)) + b).passes());
    }
  }
}

TEST_CASE("smallest passing multiple") {
  const auto lat = make_lattice(group::elementary_abelian(3, 2), 3);
  const auto reg = regular(lat);
  CHECK(smallest_passing_multiple(reg, 24) == std::optional<std::int64_t>(1));
  const auto bad = from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 2 : 0; });
  CHECK_FALSE(smallest_passing_multiple(bad, 24).has_value());
}

TEST_CASE("codimension-one sum rule") {
  const auto v = group::elementary_abelian(3, 2);
  const auto lat = make_lattice(v, 3);
  const auto whole = group::whole_group(v);
  const auto reg = check_codim_one_sum(regular(lat), whole);
  CHECK(reg.holds);
  CHECK(reg.lhs == 8);
  CHECK(reg.rhs == 8);
  CHECK(reg.euler.factor_degrees.size() == 4);
  const auto c = check_codim_one_sum(SuperClassFunction::constant(lat, 3), whole);
  CHECK(c.holds);
  CHECK(c.lhs == 0);
  const auto bad = check_codim_one_sum(from_rule(lat, [](const Subgroup& h) { return h.order() == 1 ? 4 : 2; }), whole);
  CHECK_FALSE(bad.holds);
  CHECK(bad.lhs == 2);
  CHECK(bad.rhs == 0);
  const auto z9 = group::cyclic(9);
  CHECK_THROWS_AS(check_codim_one_sum(SuperClassFunction::constant(make_lattice(z9, 3), 1), group::whole_group(z9)), Error);
}

TEST_CASE("Lefschetz numbers on a product of two spheres") {
  const IntMatrix one{{1}};
  const IntMatrix rot{{0, -1}, {1, -1}};
  const IntMatrix id{{1, 0}, {0, 1}};
  CHECK(lefschetz_number(3, one, rot, one) == 3);
  CHECK(lefschetz_number(4, one, rot, one) == 1);
  CHECK(lefschetz_number(3, one, id, one) == 0);
  CHECK(lefschetz_number(2, one, id, one) == 4);
}

TEST_CASE("generation by elements of order p") {
  const auto q = generation_by_order_p(group::construct_qdp(3), 3);
  CHECK(q.generated);
  CHECK(q.closure_order == 216);
  CHECK_FALSE(generation_by_order_p(group::cyclic(4), 2).generated);
  CHECK(generation_by_order_p(group::cyclic(5), 5).generated);
}

TEST_CASE("integer solver") {
  IntSolver s;
  const auto a = s.add_variable("a", 0, 5);
  const auto b = s.add_variable("b", 0, 5);
  s.add_eq({{a, 1}, {b, 1}}, 7, "sum");
  s.add_le({{a, 1}, {b, -1}}, -1, "a<b");
  s.add_even({{a, 1}}, 0, "a even");
  const auto r = s.solve();
  REQUIRE(r.satisfiable);
  CHECK(r.solution == std::vector<std::int64_t>{2, 5});
  CHECK(s.violated(r.solution).empty());
  CHECK(s.violated({3, 4}) == std::vector<std::string>{"a even"});
  IntSolver t;
  const auto x = t.add_variable("x", 0, 3);
  t.add_eq({{x, 2}}, 3, "odd");
  CHECK_FALSE(t.solve().satisfiable);
}

TEST_CASE("Qd(3) obstruction certificate") {
  const auto c = qdp_obstruction_theorem_B(3);
  CHECK(c.group_order == 216);
  CHECK(c.sylow_order == 27);
  CHECK(c.center.size() == 3);
  CHECK(c.noncentral.size() == 3);
  CHECK(c.unsat);
  CHECK(c.fusion_forces_equality);
  CHECK(c.methods_agree);
  CHECK(c.control_sat);
  CHECK(c.witness_count > 0);
  CHECK(c.status() == LegStatus::Verified);
  // the witness conjugates Z(P) onto C elementwise
  const auto g = group::construct_qdp(3);
  std::vector<group::Element> img;
  for (auto z : c.center) img.push_back(g->conjugate(c.witness, z));
  std::sort(img.begin(), img.end());
  CHECK(img == c.noncentral);
}

TEST_CASE("obstruction certificate hypotheses") {
  try {
    qdp_obstruction_theorem_B(2);
    FAIL("p = 2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenPrime);
  }
  CHECK_THROWS_AS(qdp_obstruction_theorem_B(9), Error);
}

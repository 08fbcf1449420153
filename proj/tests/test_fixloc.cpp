#include <doctest.h>

#include <functional>

#include "qdp/error.hpp"
#include "qdp/fixloc.hpp"
#include "qdp/json_io.hpp"
#include "support.hpp"

using namespace qdp;
using namespace qdp::fixloc;

namespace {

LocalElement fiber(std::uint32_t p, std::int64_t t, std::int64_t c = 1, std::uint8_t s = 0) {
  LocalElement e(p);
  e.add({t, s, Gen::Fiber}, c);
  return e;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST_CASE("monomial strings") {
  CHECK(monomial_string({0, 0, Gen::Unit}) == "1");
  CHECK(monomial_string({1, 0, Gen::Unit}) == "t");
  CHECK(monomial_string({-2, 1, Gen::Fiber}) == "t^-2*s");
  for (const Cell c : {Cell{3, 1, Gen::Fiber}, Cell{-4, 0, Gen::Unit}, Cell{0, 1, Gen::Unit}})
    CHECK(parse_monomial(monomial_string(c), c.gen) == c);
  CHECK(kind_of([] { parse_monomial("t^x", Gen::Unit); }) == ErrorKind::MalformedInput);
}

TEST_CASE("local elements") {
  LocalElement e(3);
  e.add({-2, 0, Gen::Fiber}, 2);
  e.add({-2, 0, Gen::Fiber}, 1);
  CHECK(e.is_zero());
  e.add({-3, 1, Gen::Fiber}, 4);
  CHECK(e.coefficient({-3, 1, Gen::Fiber}) == 1);
  CHECK(e.pole_order() == 3);
  CHECK(e.shifted(3).pole_order() == 0);
  CHECK(e.degree_of({-3, 1, Gen::Fiber}, 4) == -1);
  CHECK(e.to_string() == "1*t^-3*s*g_n");
}

TEST_CASE("model validation") {
  CHECK(kind_of([] { TwoRowModule(4, 3, std::nullopt); }) == ErrorKind::InvalidModel);
  CHECK(kind_of([] { TwoRowModule(3, 5, Differential{0, 3}); }) == ErrorKind::InvalidModel);
  CHECK(kind_of([] { TwoRowModule(3, 5, Differential{1, 2}); }) == ErrorKind::InvalidModel);
  // P^3 exceeds n/2 on g_4
  CHECK(kind_of([] { TwoRowModule(3, 4, std::nullopt, {{3, fiber(3, 6)}}); }) == ErrorKind::InvalidModel);
  // wrong degree: P^1(g_2) must sit in degree 6
  CHECK(kind_of([] { TwoRowModule(3, 2, std::nullopt, {{1, fiber(3, 1)}}); }) == ErrorKind::InvalidModel);
  // negative exponents are not classes of HE
  CHECK(kind_of([] { TwoRowModule(3, 2, std::nullopt, {{1, fiber(3, 2).shifted(-4)}}); }) == ErrorKind::InvalidModel);
  // beta(g_n) = s g_n would give beta^2 != 0
  CHECK(kind_of([] { TwoRowModule(3, 2, std::nullopt, {{0, fiber(3, 0, 1, 1)}}); }) == ErrorKind::InvalidModel);
  // nonsplit models carry no extra data
  CHECK(kind_of([] { TwoRowModule(3, 5, Differential{1, 3}, {{1, fiber(3, 2)}}); }) == ErrorKind::InvalidModel);
  // zero entries are dropped
  CHECK(TwoRowModule(3, 2, std::nullopt, {{1, LocalElement(3)}}).steenrod_data().empty());
}

TEST_CASE("HE presentations") {
  const auto lens = he_presentation(TwoRowModule::nonsplit(3, 5), 8);
  CHECK_FALSE(lens.free);
  CHECK(lens.dims == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 0, 0, 0});
  const auto triv = he_presentation(TwoRowModule::trivial(3, 4), 6);
  CHECK(triv.free);
  CHECK(triv.dims == std::vector<std::uint32_t>{1, 1, 1, 1, 2, 2, 2});
  const auto rp1 = he_presentation(TwoRowModule::nonsplit(2, 1), 4);
  CHECK(rp1.dims == std::vector<std::uint32_t>{1, 1, 0, 0, 0});
  CHECK(rp1.description == "F_2[t]/(t^2)");
}

TEST_CASE("fix rank examples") {
  const auto lens = fix_rank(TwoRowModule::nonsplit(3, 5));
  CHECK(lens.rank == -1);
  CHECK_FALSE(lens.witness);
  const auto triv = fix_rank(TwoRowModule::trivial(3, 4));
  CHECK(triv.rank == 4);
  REQUIRE(triv.witness);
  CHECK(*triv.witness == fiber(3, 0));
  CHECK(triv.unique);
}

TEST_CASE("S(R+L) at p = 3 against its Borel cohomology") {
  // S(R+L) is the unit sphere in the Thom space of L over BZ/3; the fiber class
  // is the Thom class U and P(U) = (P(e)/e) U with e = t the Euler class of L.
  const std::uint32_t p = 3;
  const auto e = steenrod::GradedElement::t(p);
  const auto total = e + steenrod::steenrod_power(1, e);  // t + t^3
  CHECK(total == e + e.pow(3));
  // P^1(U) = t^2 U, beta(U) = 0 (the Euler class is a polynomial class)
  const auto m = TwoRowModule::representation_sphere(p, 1, 1);
  CHECK(m.fiber_degree() == 2);
  CHECK(m.operation_on_fiber(1) == fiber(p, 2));
  CHECK(m.operation_on_fiber(0).is_zero());
  CHECK(steenrod::bockstein(e).is_zero());
  // the fixed set is S(R) = S^0
  const auto r = fix_rank(m);
  CHECK(r.rank == 0);
  REQUIRE(r.witness);
  CHECK(*r.witness == fiber(p, -1));
  // P^1(t^-1 U) = C(-1,1) t U + t^-1 t^2 U = (-1 + 1) t U
  CHECK(fp::binomial_signed(-1, 1, p) == p - 1);
  CHECK(apply_power(m, 1, *r.witness).is_zero());
  CHECK(apply_bockstein(m, *r.witness).is_zero());
  CHECK(verify_witness(m, *r.witness, r.checked_ops));
  CHECK(r.unique);
}

TEST_CASE("representation spheres follow dim S(kR)^G = k - 1") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t k = 1; k <= 3; ++k)
      for (std::uint32_t l = 0; l <= 3; ++l) {
        const auto m = TwoRowModule::representation_sphere(p, k, l);
        const auto r = fix_rank(m);
        CHECK(r.rank == static_cast<int>(k) - 1);
        REQUIRE(r.witness);
        CHECK(verify_witness(m, *r.witness, r.checked_ops));
      }
  CHECK(fix_rank(TwoRowModule::representation_sphere(3, 0, 2)).rank == -1);
}

TEST_CASE("nonsplit family gives -1 on the admissible grid") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 0; n <= 10; ++n) {
      if (p != 2 && n % 2 == 0) continue;
      for (std::uint32_t lambda = 1; lambda < p; ++lambda) CHECK(fix_rank(TwoRowModule::nonsplit(p, n, lambda)).rank == -1);
    }
}

TEST_CASE("trivial family gives n") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 0; n <= 20; ++n) {
      const auto m = TwoRowModule::trivial(p, n);
      const auto r = fix_rank(m);
      CHECK(r.rank == static_cast<int>(n));
      REQUIRE(r.witness);
      CHECK(verify_witness(m, *r.witness, r.checked_ops));
    }
}

TEST_CASE("join models are consistent with the rank rule") {
  const std::vector<TwoRowModule> bases{TwoRowModule::representation_sphere(3, 1, 1),
                                        TwoRowModule::representation_sphere(5, 2, 3),
                                        TwoRowModule::representation_sphere(2, 2, 1), TwoRowModule::trivial(3, 2)};
  for (const auto& base : bases) {
    const int r = fix_rank(base).rank;
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const auto joined = join_power(base, m);
      const auto fr = fix_rank(joined);
      CHECK(fr.rank == static_cast<int>(m) * (r + 1) - 1);
      CHECK(fr.rank == iterated_join_rank(r, m));
      REQUIRE(fr.witness);
      CHECK(verify_witness(joined, *fr.witness, fr.checked_ops));
    }
  }
  const auto nn = join(TwoRowModule::nonsplit(3, 1), TwoRowModule::nonsplit(3, 3, 2));
  CHECK(nn.fiber_degree() == 5);
  REQUIRE(nn.differential());
  CHECK(nn.differential()->lambda == 2);
  CHECK(nn.differential()->a == 3);
  CHECK(kind_of([] { join(TwoRowModule::nonsplit(3, 1), TwoRowModule::trivial(3, 2)); }) == ErrorKind::InvalidModel);
}

TEST_CASE("tensor and join rules") {
  CHECK(fix_tensor_rule(0, 0) == std::vector<int>{0, 0, 0, 0});
  CHECK(fix_tensor_rule(-1, 3).empty());
  CHECK(fix_tensor_rule(2, 3) == std::vector<int>{0, 2, 3, 5});
  CHECK(fix_join_rule(1, 1) == 3);
  for (int r = -1; r <= 6; ++r) {
    CHECK(fix_join_rule(-1, r) == r);
    CHECK(fix_join_rule(r, -1) == r);
    for (int s = -1; s <= 6; ++s)
      for (int q = -1; q <= 6; ++q) CHECK(fix_join_rule(fix_join_rule(r, s), q) == fix_join_rule(r, fix_join_rule(s, q)));
    for (std::uint32_t m = 1; m <= 5; ++m) CHECK(iterated_join_rank(r, m) == static_cast<int>(m) * (r + 1) - 1);
  }
  CHECK(kind_of([] { fix_join_rule(-2, 0); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("Euler classes of joins") {
  CHECK(euler_join(std::vector<std::int64_t>{4, 6}) == 10);
  const auto zeta = steenrod::invariants(3).zeta;
  const auto two = euler_join_power(zeta, 2);
  CHECK(two.power == zeta * zeta);
  CHECK_FALSE(two.nilpotent);
  // F_3[x,y] is a domain: the lex-leading term of zeta^m is (-x^3 y)^m
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const auto pw = euler_join_power(zeta, m).power;
    REQUIRE_FALSE(pw.is_zero());
    const auto& [lead, c] = *pw.terms().begin();
    CHECK(lead == steenrod::Monomial{3 * m, m, 0, 0});
    CHECK(c == (m % 2 ? 2u : 1u));
  }
  const auto ux = steenrod::GradedElement::parse(3, "u*x");
  const auto nil = euler_join_power(ux, 2);
  CHECK(nil.nilpotent);
  CHECK(nil.power.is_zero());
  CHECK(kind_of([] { euler_join(std::vector<steenrod::GradedElement>{steenrod::GradedElement::parse(3, "x + u")}); }) ==
        ErrorKind::Inhomogeneous);
}

TEST_CASE("model JSON round-trip") {
  for (const auto& m : {TwoRowModule::representation_sphere(5, 2, 3), TwoRowModule::nonsplit(3, 5, 2),
                        TwoRowModule::representation_sphere(2, 1, 2)}) {
    const auto back = io::model_from_json(io::model_to_json(m));
    CHECK(back.prime() == m.prime());
    CHECK(back.fiber_degree() == m.fiber_degree());
    CHECK(back.split() == m.split());
    CHECK(back.steenrod_data() == m.steenrod_data());
    CHECK(fix_rank(back).rank == fix_rank(m).rank);
  }
  const auto w = fiber(3, -2, 2, 1);
  CHECK(io::local_element_from_json(3, io::local_element_to_json(w)) == w);
}

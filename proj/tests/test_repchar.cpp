#include <doctest.h>

#include <algorithm>
#include <set>

#include "qdp/dimfun.hpp"
#include "qdp/error.hpp"
#include "qdp/json_io.hpp"
#include "qdp/repchar.hpp"
#include "support.hpp"

using namespace qdp;
using namespace qdp::repchar;
using group::Element;

namespace {

std::vector<std::int64_t> degrees(const std::vector<Character>& chars) {
  std::vector<std::int64_t> out;
  for (const auto& c : chars) out.push_back(c.degree());
  return out;
}

// orbits of H acting on G by left multiplication = dim of the H-fixed part of C[G]
std::size_t left_orbits(const group::Subgroup& h) {
  const auto& g = h.group();
  std::set<std::vector<Element>> orbits;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> o;
    for (Element m : h.members()) o.push_back(g.mul(m, x));
    std::sort(o.begin(), o.end());
    orbits.insert(o);
  }
  return orbits.size();
}

// dim ker(A - I) over Q for a 2x2 integer matrix
int kernel_dim(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::int64_t m00 = a - 1, m11 = d - 1;
  if (m00 * m11 - b * c != 0) return 0;
  return (m00 == 0 && b == 0 && c == 0 && m11 == 0) ? 2 : 1;
}

std::vector<group::GroupPtr> small_p_groups() {
  using namespace qdp::group;
  return {cyclic(2),          cyclic(4),          elementary_abelian(2, 2), dihedral(8), generalized_quaternion(8),
          cyclic(8),          generalized_quaternion(16), dihedral(16),      semidihedral(16), modular_2group(16),
          cyclic(3),          cyclic(9),          elementary_abelian(3, 2), heisenberg(3), cyclic(5),
          elementary_abelian(5, 2)};
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto z = Cyclotomic::root(3, 1);
  CHECK(z * z * z == Cyclotomic::integer(3, 1));
  CHECK(z + z * z == Cyclotomic::integer(3, -1));
  CHECK(z.conj() == z * z);
  const auto w = Cyclotomic::root(9, 2);
  CHECK(w.galois(2) == Cyclotomic::root(9, 4));
  CHECK((w - w).is_zero());
}

TEST_CASE("Z/3 has three linear characters with values in cube roots of unity") {
  const auto chars = irreducible_characters(group::cyclic(3));
  REQUIRE(chars.size() == 3);
  for (const auto& chi : chars) {
    CHECK(chi.degree() == 1);
    for (Element g = 0; g < 3; ++g) CHECK(chi(g) * chi(g) * chi(g) == Cyclotomic::integer(3, 1));
  }
}

TEST_CASE("Heisenberg group of order 27: nine linear and two of degree three") {
  const auto chars = irreducible_characters(group::heisenberg(3));
  auto d = degrees(chars);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  std::int64_t sum = 0;
  for (auto x : d) sum += x * x;
  CHECK(sum == 27);
}

TEST_CASE("(Z/2)^2 has four linear characters") {
  const auto chars = irreducible_characters(group::elementary_abelian(2, 2));
  CHECK(degrees(chars) == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("non-p-groups are refused") {
  try {
    irreducible_characters(group::symmetric(3));
    FAIL("S3 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPGroup);
  }
}

TEST_CASE("row and column orthogonality") {
  for (const auto& g : small_p_groups()) {
    const auto chars = irreducible_characters(g);
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < chars.size(); ++j) CHECK(inner_product(chars[i], chars[j]) == (i == j ? 1 : 0));
    const auto& cls = chars.front().classes();
    const auto e = chars.front().cyclotomic_order();
    for (std::size_t a = 0; a < cls.classes.size(); ++a)
      for (std::size_t b = 0; b < cls.classes.size(); ++b) {
        Cyclotomic s(e);
        for (const auto& chi : chars) s += chi.class_values()[a] * chi.class_values()[b].conj();
        const Element x = cls.classes[a].front();
        std::int64_t centralizer = 0;
        for (Element y = 0; y < g->order(); ++y) centralizer += g->commute(x, y);
        CHECK(s == Cyclotomic::integer(e, a == b ? centralizer : 0));
      }
  }
}

TEST_CASE("Frobenius-Schur indicators") {
  auto indicators = [](const group::GroupPtr& g) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (const auto& c : irreducible_characters(g)) out.push_back({c.degree(), frobenius_schur(c)});
    std::sort(out.begin(), out.end());
    return out;
  };
  using V = std::vector<std::pair<std::int64_t, int>>;
  CHECK(indicators(group::generalized_quaternion(8)) == V{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, -1}});
  CHECK(indicators(group::dihedral(8)) == V{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}});
  CHECK(indicators(group::cyclic(3)) == V{{1, 0}, {1, 0}, {1, 1}});
  // Q16: the two faithful degree-two characters are quaternionic, the one from D8 is real
  CHECK(indicators(group::generalized_quaternion(16)) ==
        V{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, -1}, {2, -1}, {2, 1}});
}

TEST_CASE("fixed dimensions") {
  const auto v = group::elementary_abelian(3, 2);
  const auto reg = regular_character(v);
  for (const auto& h : group::cyclic_subgroups(group::whole_group(v))) {
    CHECK(fixed_dimension(reg, h) == static_cast<std::int64_t>(left_orbits(h)));
    if (h.order() == 3) CHECK(fixed_dimension(reg, h) == 3);
    CHECK(fixed_dimension(trivial_character(v), h) == 1);
  }
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto z = group::cyclic(p);
    for (const auto& chi : irreducible_characters(z))
      if (!(chi == trivial_character(z, chi.classes_ptr())))
        CHECK(fixed_dimension(chi, group::whole_group(z)) == 0);
  }
}

TEST_CASE("realified faithful character of Z/3 is the rotation plane") {
  const auto z3 = group::cyclic(3);
  const auto lat = dimfun::make_lattice(z3, 3);
  const auto basis = real_representation_basis(z3);
  REQUIRE(basis.entries.size() == 2);
  const auto& pair = *std::find_if(basis.entries.begin(), basis.entries.end(),
                                    [](const RealBasisEntry& e) { return e.type == RealType::ComplexPair; });
  CHECK(pair.real_degree() == 2);
  const auto tau = real_dimension_function(pair, lat);
  // [[0,-1],[1,-1]] has order 3 and no fixed vectors
  CHECK(kernel_dim(0, -1, 1, -1) == 0);
  CHECK(tau.at(group::whole_group(z3)) == kernel_dim(0, -1, 1, -1));
  CHECK(tau.at(group::trivial_subgroup(z3)) == 2);
}

TEST_CASE("trivial representation gives the constant function 1") {
  for (const auto& g : small_p_groups()) {
    const std::uint32_t p = g->order() % 2 == 0 ? 2 : g->order() % 3 == 0 ? 3 : 5;
    const auto lat = dimfun::make_lattice(g, p);
    const auto basis = real_representation_basis(g);
    const auto& cls = basis.entries.front().character.classes_ptr();
    const auto triv = std::find_if(basis.entries.begin(), basis.entries.end(),
                                   [&](const RealBasisEntry& e) { return e.character == trivial_character(g, cls); });
    REQUIRE(triv != basis.entries.end());
    CHECK(real_dimension_function(*triv, lat) == dimfun::SuperClassFunction::constant(lat, 1));
  }
}

TEST_CASE("real dimension functions: monotone, Borel-Smith, constant on conjugates") {
  for (const auto& g : small_p_groups()) {
    const std::uint32_t p = g->order() % 2 == 0 ? 2 : g->order() % 3 == 0 ? 3 : 5;
    const auto lat = dimfun::make_lattice(g, p);
    const auto basis = real_representation_basis(g);
    std::int64_t sum = 0;
    for (const auto& e : basis.entries) {
      const auto tau = real_dimension_function(e, lat);
      CHECK(dimfun::is_monotone(tau).monotone);
      CHECK(dimfun::check_borel_smith(tau).passes());
      for (const auto& h : lat->subgroups())
        for (Element x : g->generators())
          CHECK(fixed_dimension(e.character, h) == fixed_dimension(e.character, group::conjugate(h, x)));
      sum += e.character.degree() * e.character.degree() * (e.type == RealType::ComplexPair ? 2 : 1);
    }
    CHECK(sum == static_cast<std::int64_t>(g->order()));
  }
}

TEST_CASE("character table JSON") {
  const auto chars = irreducible_characters(group::heisenberg(3));
  const auto j = io::character_table_to_json(chars);
  CHECK(j["schema"] == "1");
  CHECK(j["cyclotomic_order"] == 3);
  CHECK(j["classes"].size() == 11);
  CHECK(j["characters"].size() == 11);
  std::size_t total = 0;
  for (const auto& c : j["classes"]) total += c["size"].get<std::size_t>();
  CHECK(total == 27);
}

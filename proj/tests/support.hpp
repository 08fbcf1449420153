#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdp/fp.hpp"
#include "qdp/graded.hpp"
#include "qdp/group.hpp"

namespace qdp::test {

// fixed seeds only; every property run is reproducible
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 gen_;
};

// random homogeneous element of F_p[x,y] (x) Lambda(u,v) in degree deg (rank two)
inline steenrod::GradedElement random_homogeneous(Rng& rng, std::uint32_t p, std::uint32_t deg, int max_terms = 4) {
  steenrod::GradedElement out(p);
  const auto basis = steenrod::monomials_of_degree(p, 2, deg);
  if (basis.empty()) return out;
  const int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int i = 0; i < terms; ++i) out.add_term(rng.pick(basis), rng.uniform(1, p - 1));
  return out;
}

inline steenrod::GradedElement random_polynomial(Rng& rng, std::uint32_t p, std::uint32_t deg, int max_terms = 4) {
  steenrod::GradedElement out(p);
  const std::uint32_t half = deg / 2;
  const int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int i = 0; i < terms; ++i) {
    const auto a = static_cast<std::uint32_t>(rng.uniform(0, half));
    out.add_term({a, half - a, 0, 0}, rng.uniform(1, p - 1));
  }
  return out;
}

// random even degree up to max_deg (both parities when odd_ok)
inline std::uint32_t random_degree(Rng& rng, std::uint32_t max_deg, bool odd_ok = true) {
  const auto d = static_cast<std::uint32_t>(rng.uniform(0, max_deg));
  return odd_ok ? d : d - d % 2;
}

inline group::Mat2 random_sl2(Rng& rng, std::uint32_t p) {
  for (;;) {
    group::Mat2 m{};
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
    if (fp::sub(fp::mul(m[0], m[3], p), fp::mul(m[1], m[2], p), p) == 1) return m;
  }
}

inline group::Mat2 mat_mul(const group::Mat2& a, const group::Mat2& b, std::uint32_t p) {
  return {fp::add(fp::mul(a[0], b[0], p), fp::mul(a[1], b[2], p), p),
          fp::add(fp::mul(a[0], b[1], p), fp::mul(a[1], b[3], p), p),
          fp::add(fp::mul(a[2], b[0], p), fp::mul(a[3], b[2], p), p),
          fp::add(fp::mul(a[2], b[1], p), fp::mul(a[3], b[3], p), p)};
}

// binomial mod p through Pascal's triangle, kept apart from the library's Lucas version
inline std::uint32_t pascal_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::vector<std::uint32_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = std::min<std::uint64_t>(i, k); j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
  return row[k];
}

}  // namespace qdp::test

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdp::repchar {

/// Exact element of Z[zeta_e] for e = 1 or a prime power, stored in the basis
/// 1, zeta, ..., zeta^(phi(e)-1) after reduction modulo the cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(std::uint32_t order);
  static Cyclotomic integer(std::uint32_t order, std::int64_t n);
  /// zeta_e^k
  static Cyclotomic root(std::uint32_t order, std::int64_t k);

  std::uint32_t order() const { return e_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool is_integer() const;
  /// Value as a rational integer; only valid when is_integer().
  std::int64_t as_integer() const { return c_.empty() ? 0 : c_[0]; }
  bool is_zero() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic scaled(std::int64_t k) const;

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Galois action zeta -> zeta^k (k a unit mod e).
  Cyclotomic galois(std::int64_t k) const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  friend auto operator<=>(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ <=> b.c_; }

  std::string to_string() const;

 private:
  void add_root(std::int64_t k, std::int64_t coeff);
  static std::uint32_t phi(std::uint32_t e);

  std::uint32_t e_ = 1;
  std::vector<std::int64_t> c_{0};
};

}  // namespace qdp::repchar

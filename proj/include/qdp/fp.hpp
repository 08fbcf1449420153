#pragma once

#include <cstdint>

namespace qdp {

/// Arithmetic in the prime field F_p. Values are kept in [0, p).
namespace fp {

bool is_prime(std::uint64_t n);

inline std::uint32_t reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b) % p; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return (p - a) % p; }

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Multiplicative inverse; a must be nonzero mod p.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Binomial coefficient C(n, k) mod p for n >= 0 (Lucas).
std::uint32_t binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Generalized binomial C(n, k) mod p for any integer n and k >= 0,
/// using C(-m, k) = (-1)^k C(m + k - 1, k).
std::uint32_t binomial_signed(std::int64_t n, std::uint64_t k, std::uint32_t p);

/// Largest power of p dividing n (n > 0), i.e. the p-part.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace fp
}  // namespace qdp

#include "qdp/fp.hpp"

#include "qdp/error.hpp"

namespace qdp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::CompositeP: return "CompositeP";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotBorelSmith: return "NotBorelSmith";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::IncompleteInduction: return "IncompleteInduction";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::DegreeBudget: return "DegreeBudget";
  }
  return "Unknown";
}

namespace fp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::DomainMismatch, "inverse of zero in F_p");
  return pow(a, p - 2, p);
}

namespace {

std::uint32_t small_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num = mul(num, (n - i) % p, p);
    den = mul(den, (i + 1) % p, p);
  }
  return mul(num, inv(den, p), p);
}

}  // namespace

std::uint32_t binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t result = 1;
  while (n || k) {
    auto nd = static_cast<std::uint32_t>(n % p), kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    result = mul(result, small_binomial(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return result;
}

std::uint32_t binomial_signed(std::int64_t n, std::uint64_t k, std::uint32_t p) {
  if (n >= 0) return binomial(static_cast<std::uint64_t>(n), k, p);
  std::uint64_t m = static_cast<std::uint64_t>(-n);
  std::uint32_t c = binomial(m + k - 1, k, p);
  return (k % 2) ? neg(c, p) : c;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace fp
}  // namespace qdp

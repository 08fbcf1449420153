#include "qdp/cyclotomic.hpp"

#include <sstream>

#include "qdp/error.hpp"

namespace qdp::repchar {

namespace {

std::uint32_t smallest_prime_factor(std::uint32_t e) {
  for (std::uint32_t d = 2; d * d <= e; ++d)
    if (e % d == 0) return d;
  return e;
}

}  // namespace

std::uint32_t Cyclotomic::phi(std::uint32_t e) {
  if (e == 1) return 1;
  const std::uint32_t p = smallest_prime_factor(e);
  return e - e / p;
}

Cyclotomic::Cyclotomic(std::uint32_t order) : e_(order) {
  if (order == 0) throw Error(ErrorKind::DomainMismatch, "cyclotomic order must be positive");
  if (order > 1) {
    const std::uint32_t p = smallest_prime_factor(order);
    std::uint32_t m = order;
    while (m % p == 0) m /= p;
    if (m != 1) throw Error(ErrorKind::DomainMismatch, "cyclotomic order must be a prime power");
  }
  c_.assign(phi(order), 0);
}

Cyclotomic Cyclotomic::integer(std::uint32_t order, std::int64_t n) {
  Cyclotomic z(order);
  z.c_[0] = n;
  return z;
}

Cyclotomic Cyclotomic::root(std::uint32_t order, std::int64_t k) {
  Cyclotomic z(order);
  z.add_root(k, 1);
  return z;
}

// zeta^k for k >= phi(e) is rewritten using
// zeta^((p-1)e/p + r) = -sum_{j<p-1} zeta^(j e/p + r).
void Cyclotomic::add_root(std::int64_t k, std::int64_t coeff) {
  const std::int64_t e = e_;
  k %= e;
  if (k < 0) k += e;
  const std::int64_t f = static_cast<std::int64_t>(c_.size());
  if (k < f) {
    c_[k] += coeff;
    return;
  }
  const std::int64_t p = smallest_prime_factor(e_);
  const std::int64_t step = e / p;
  const std::int64_t r = k - f;
  for (std::int64_t j = 0; j < p - 1; ++j) c_[j * step + r] -= coeff;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.e_ != e_) throw Error(ErrorKind::DomainMismatch, "cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.e_ != e_) throw Error(ErrorKind::DomainMismatch, "cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ != b.e_) throw Error(ErrorKind::DomainMismatch, "cyclotomic orders differ");
  Cyclotomic out(a.e_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) out.add_root(static_cast<std::int64_t>(i + j), a.c_[i] * b.c_[j]);
  }
  return out;
}

Cyclotomic Cyclotomic::scaled(std::int64_t k) const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x *= k;
  return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  Cyclotomic out(e_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.add_root(static_cast<std::int64_t>(i) * k, c_[i]);
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? "+" : "");
    os << c_[i];
    if (i > 0) os << "*z" << e_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qdp::repchar

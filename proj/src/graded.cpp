#include "qdp/graded.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::steenrod {

GradedElement::GradedElement(std::uint32_t p, int rank) : p_(p), rank_(rank) {
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  if (rank != 1 && rank != 2) throw Error(ErrorKind::DomainMismatch, "rank must be 1 or 2");
}

GradedElement GradedElement::constant(std::uint32_t p, std::int64_t c, int rank) {
  return monomial(p, {}, c, rank);
}

GradedElement GradedElement::monomial(std::uint32_t p, Monomial m, std::int64_t c, int rank) {
  GradedElement out(p, rank);
  out.add_term(m, c);
  return out;
}

GradedElement GradedElement::s(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "F_2[t] has no exterior generator");
  return monomial(p, {0, 0, 1, 0}, 1, 1);
}

std::uint32_t GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::uint32_t GradedElement::degree_of(const Monomial& m, std::uint32_t p, int rank) {
  if (rank == 1 && p == 2) return m.a;
  return 2 * (m.a + m.b) + m.e + m.d;
}

bool GradedElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = degree_of(terms_.begin()->first, p_, rank_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m, p_, rank_) != d) return false;
  return true;
}

std::uint32_t GradedElement::degree() const {
  if (terms_.empty()) throw Error(ErrorKind::Inhomogeneous, "zero has no degree");
  if (!is_homogeneous()) throw Error(ErrorKind::Inhomogeneous, to_string() + " is not homogeneous");
  return degree_of(terms_.begin()->first, p_, rank_);
}

GradedElement GradedElement::component(std::uint32_t deg) const {
  GradedElement out(p_, rank_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m, p_, rank_) == deg) out.terms_.emplace(m, c);
  return out;
}

GradedElement GradedElement::polynomial_part() const {
  GradedElement out(p_, rank_);
  for (const auto& [m, c] : terms_)
    if (m.e == 0 && m.d == 0) out.terms_.emplace(m, c);
  return out;
}

void GradedElement::add_term(const Monomial& m, std::int64_t c) {
  if (rank_ == 1 && (m.b != 0 || m.d != 0)) throw Error(ErrorKind::DomainMismatch, "rank-one element uses only t, s");
  if (rank_ == 1 && p_ == 2 && m.e != 0) throw Error(ErrorKind::EvenPrime, "F_2[t] has no exterior generator");
  if (m.e > 1 || m.d > 1) return;
  const std::uint32_t r = fp::reduce(c, p_);
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(m, r);
  if (!inserted) {
    it->second = fp::add(it->second, r, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_same(const GradedElement& a, const GradedElement& b) {
  if (a.prime() != b.prime()) throw Error(ErrorKind::PrimeMismatch, "elements over different primes");
  if (a.rank() != b.rank()) throw Error(ErrorKind::DomainMismatch, "elements of different rank");
}

}  // namespace

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

GradedElement GradedElement::operator-() const { return scaled(-1); }

GradedElement GradedElement::scaled(std::int64_t c) const {
  GradedElement out(p_, rank_);
  const std::uint32_t r = fp::reduce(c, p_);
  if (r == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, fp::mul(x, r, p_));
  return out;
}

GradedElement GradedElement::pow(std::uint64_t k) const {
  GradedElement result = constant(p_, 1, rank_), base = *this;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

std::vector<std::string> GradedElement::term_strings() const {
  std::vector<std::string> out;
  const char* names = rank_ == 1 ? "t?s?" : "xyuv";
  for (const auto& [m, c] : terms_) {
    std::ostringstream os;
    os << c;
    auto factor = [&](char name, std::uint32_t e) {
      if (e == 0) return;
      os << "*" << name;
      if (e > 1) os << "^" << e;
    };
    factor(names[0], m.a);
    if (rank_ == 2) factor(names[1], m.b);
    factor(names[2], m.e);
    if (rank_ == 2) factor(names[3], m.d);
    out.push_back(os.str());
  }
  return out;
}

std::string GradedElement::to_string() const {
  const auto parts = term_strings();
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

GradedElement GradedElement::parse(std::uint32_t p, const std::string& text, int rank) {
  GradedElement out(p, rank);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::int64_t {
    skip();
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::MalformedInput, "expected a number in '" + text + "'");
    std::int64_t v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip();
  if (i == n) throw Error(ErrorKind::MalformedInput, "empty element");
  bool first = true;
  while (true) {
    skip();
    if (i == n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(ErrorKind::MalformedInput, "expected + or - in '" + text + "'");
    }
    first = false;
    GradedElement term = constant(p, sign, rank);
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        term = term.scaled(number());
      } else if (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) {
        const char name = text[i++];
        GradedElement var(p, rank);
        if (rank == 2 && name == 'x') var = x(p);
        else if (rank == 2 && name == 'y') var = y(p);
        else if (rank == 2 && name == 'u') var = u(p);
        else if (rank == 2 && name == 'v') var = v(p);
        else if (rank == 1 && name == 't') var = t(p);
        else if (rank == 1 && name == 's') var = s(p);
        else throw Error(ErrorKind::MalformedInput, std::string("unknown variable '") + name + "'");
        std::int64_t e = 1;
        skip();
        if (i < n && text[i] == '^') {
          ++i;
          e = number();
        }
        term = multiply(term, var.pow(static_cast<std::uint64_t>(e)));
      } else {
        throw Error(ErrorKind::MalformedInput, "unexpected character in '" + text + "'");
      }
      skip();
      need_factor = i < n && text[i] == '*';
      if (need_factor) ++i;
    }
    out += term;
  }
  return out;
}

GradedElement multiply(const GradedElement& a, const GradedElement& b) {
  check_same(a, b);
  const std::uint32_t p = a.prime();
  GradedElement out(p, a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.e && mb.e) || (ma.d && mb.d)) continue;
      // move u^(e_b) left past v^(d_a)
      const bool negative = ma.d && mb.e;
      const Monomial m{ma.a + mb.a, ma.b + mb.b, static_cast<std::uint8_t>(ma.e + mb.e),
                       static_cast<std::uint8_t>(ma.d + mb.d)};
      const std::uint32_t c = fp::mul(ca, cb, p);
      out.add_term(m, negative ? p - c : c);
    }
  }
  return out;
}

GradedElement bockstein(const GradedElement& a) {
  const std::uint32_t p = a.prime();
  GradedElement out(p, a.rank());
  for (const auto& [m, c] : a.terms()) {
    if (a.rank() == 1 && p == 2) {
      // Sq^1 t^a = a t^(a+1)
      out.add_term({m.a + 1, 0, 0, 0}, static_cast<std::int64_t>(c) * m.a);
      continue;
    }
    if (m.e && m.d) {
      // beta(uv) = xv - uy
      out.add_term({m.a + 1, m.b, 0, 1}, c);
      out.add_term({m.a, m.b + 1, 1, 0}, -static_cast<std::int64_t>(c));
    } else if (m.e) {
      out.add_term({m.a + 1, m.b, 0, 0}, c);
    } else if (m.d) {
      out.add_term({m.a, m.b + 1, 0, 0}, c);
    }
  }
  return out;
}

GradedElement steenrod_power(std::uint32_t i, const GradedElement& a) {
  const std::uint32_t p = a.prime();
  GradedElement out(p, a.rank());
  if (p == 2) {
    if (a.rank() != 1) throw Error(ErrorKind::EvenPrime, "squares are only implemented on F_2[t]");
    for (const auto& [m, c] : a.terms()) out.add_term({m.a + i, 0, 0, 0}, fp::mul(c, fp::binomial(m.a, i, 2), 2));
    return out;
  }
  // total power: x -> x + x^p, u and v fixed
  for (const auto& [m, c] : a.terms()) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      const std::uint32_t k = i - j;
      const std::uint32_t coeff = fp::mul(fp::binomial(m.a, j, p), fp::binomial(m.b, k, p), p);
      if (coeff == 0) continue;
      out.add_term({m.a + j * (p - 1), m.b + k * (p - 1), m.e, m.d}, fp::mul(c, coeff, p));
    }
  }
  return out;
}

GradedElement sl2_act(const group::Mat2& a, const GradedElement& elem) {
  const std::uint32_t p = elem.prime();
  if (elem.rank() != 2) throw Error(ErrorKind::DomainMismatch, "SL_2 acts on the rank-two ring");
  const std::uint32_t det = fp::sub(fp::mul(a[0] % p, a[3] % p, p), fp::mul(a[1] % p, a[2] % p, p), p);
  if (det != 1) throw Error(ErrorKind::NotUnimodular, "determinant is " + std::to_string(det));
  const GradedElement X = GradedElement::x(p).scaled(a[0]) + GradedElement::y(p).scaled(a[2]);
  const GradedElement Y = GradedElement::x(p).scaled(a[1]) + GradedElement::y(p).scaled(a[3]);
  const GradedElement U = GradedElement::u(p).scaled(a[0]) + GradedElement::v(p).scaled(a[2]);
  const GradedElement V = GradedElement::u(p).scaled(a[1]) + GradedElement::v(p).scaled(a[3]);
  std::vector<GradedElement> xp{GradedElement::constant(p, 1)}, yp{GradedElement::constant(p, 1)};
  GradedElement out(p);
  for (const auto& [m, c] : elem.terms()) {
    while (xp.size() <= m.a) xp.push_back(multiply(xp.back(), X));
    while (yp.size() <= m.b) yp.push_back(multiply(yp.back(), Y));
    GradedElement img = multiply(xp[m.a], yp[m.b]);
    if (m.e) img = multiply(img, U);
    if (m.d) img = multiply(img, V);
    out += img.scaled(c);
  }
  return out;
}

InvariantPair invariants(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "invariants are built for odd primes");
  GradedElement xi(p);
  for (std::uint32_t i = 0; i <= p; ++i) xi.add_term({(p - i) * (p - 1), i * (p - 1), 0, 0}, 1);
  GradedElement zeta(p);
  zeta.add_term({1, p, 0, 0}, 1);
  zeta.add_term({p, 1, 0, 0}, -1);
  return {xi, zeta};
}

std::vector<Monomial> monomials_of_degree(std::uint32_t p, int rank, std::uint32_t deg) {
  std::vector<Monomial> out;
  if (rank == 1 && p == 2) return {Monomial{deg, 0, 0, 0}};
  for (std::uint8_t e = 0; e <= 1; ++e)
    for (std::uint8_t d = 0; d <= (rank == 2 ? 1 : 0); ++d) {
      if (deg < static_cast<std::uint32_t>(e + d) || (deg - e - d) % 2) continue;
      const std::uint32_t half = (deg - e - d) / 2;
      if (rank == 1) {
        out.push_back({half, 0, e, 0});
      } else {
        for (std::uint32_t a = 0; a <= half; ++a) out.push_back({a, half - a, e, d});
      }
    }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

}  // namespace qdp::steenrod

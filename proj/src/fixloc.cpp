#include "qdp/fixloc.hpp"

#include <algorithm>
#include <sstream>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::fixloc {

using steenrod::GradedElement;

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidModel, msg); }

// the unique cell of degree deg on generator gen (two-row modules are
// one-dimensional per degree and generator after localization)
Cell cell_in_degree(std::uint32_t p, std::int64_t deg, Gen gen, std::uint32_t n) {
  const std::int64_t d = deg - (gen == Gen::Fiber ? static_cast<std::int64_t>(n) : 0);
  if (p == 2) return {d, 0, gen};
  const std::int64_t k = floor_div(d, 2);
  return {k, static_cast<std::uint8_t>(d - 2 * k), gen};
}

}  // namespace

const char* to_string(Gen g) { return g == Gen::Unit ? "g0" : "g_n"; }

std::string monomial_string(const Cell& c) {
  std::string out;
  if (c.t != 0) out = c.t == 1 ? "t" : "t^" + std::to_string(c.t);
  if (c.s) out += out.empty() ? "s" : "*s";
  return out.empty() ? "1" : out;
}

Cell parse_monomial(const std::string& text, Gen gen) {
  Cell c{0, 0, gen};
  std::string rest;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) rest += ch;
  if (rest.empty()) throw Error(ErrorKind::MalformedInput, "empty monomial");
  if (rest == "1") return c;
  std::stringstream ss(rest);
  std::string factor;
  bool seen_t = false;
  while (std::getline(ss, factor, '*')) {
    if (factor == "s") {
      if (c.s) throw Error(ErrorKind::MalformedInput, "s appears twice in '" + text + "'");
      c.s = 1;
    } else if (!factor.empty() && factor[0] == 't' && !seen_t) {
      seen_t = true;
      if (factor == "t") {
        c.t = 1;
        continue;
      }
      if (factor.size() < 3 || factor[1] != '^') throw Error(ErrorKind::MalformedInput, "bad factor '" + factor + "'");
      try {
        std::size_t used = 0;
        c.t = std::stoll(factor.substr(2), &used);
        if (used != factor.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedInput, "bad exponent in '" + factor + "'");
      }
    } else {
      throw Error(ErrorKind::MalformedInput, "bad factor '" + factor + "' in '" + text + "'");
    }
  }
  return c;
}

std::uint32_t LocalElement::coefficient(const Cell& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

void LocalElement::add(const Cell& c, std::int64_t coeff) {
  const std::uint32_t r = fp::reduce(coeff, p_);
  if (r == 0) return;
  if (p_ == 2 && c.s) throw Error(ErrorKind::EvenPrime, "H(Z/2) has no exterior generator");
  auto [it, inserted] = terms_.emplace(c, r);
  if (!inserted) {
    it->second = fp::add(it->second, r, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

LocalElement& LocalElement::operator+=(const LocalElement& o) {
  if (o.p_ != p_) throw Error(ErrorKind::PrimeMismatch, "adding localized elements over different primes");
  for (const auto& [c, v] : o.terms_) add(c, v);
  return *this;
}

LocalElement LocalElement::scaled(std::int64_t c) const {
  LocalElement out(p_);
  for (const auto& [cell, v] : terms_) out.add(cell, static_cast<std::int64_t>(fp::mul(v, fp::reduce(c, p_), p_)));
  return out;
}

LocalElement LocalElement::shifted(std::int64_t k) const {
  LocalElement out(p_);
  for (const auto& [cell, v] : terms_) out.add({cell.t + k, cell.s, cell.gen}, v);
  return out;
}

std::int64_t LocalElement::degree_of(const Cell& c, std::uint32_t n) const {
  const std::int64_t dt = p_ == 2 ? 1 : 2;
  return dt * c.t + c.s + (c.gen == Gen::Fiber ? static_cast<std::int64_t>(n) : 0);
}

std::uint64_t LocalElement::pole_order() const {
  std::int64_t low = 0;
  for (const auto& [c, v] : terms_) low = std::min(low, c.t);
  return static_cast<std::uint64_t>(-low);
}

std::string LocalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(v) + "*";
    if (c.t != 0 || c.s) out += monomial_string(c) + "*";
    out += fixloc::to_string(c.gen);
  }
  return out;
}

TwoRowModule::TwoRowModule(std::uint32_t p, std::uint32_t n, std::optional<Differential> d, SteenrodData data)
    : p_(p), n_(n), d_(d), data_(std::move(data)) {
  if (!fp::is_prime(p)) invalid(std::to_string(p) + " is not prime");
  if (d_) {
    if (d_->lambda % p == 0) invalid("differential coefficient must be a unit");
    d_->lambda %= p;
    // d(g_n) = lambda t^a has degree n + 1
    const bool ok = p == 2 ? d_->a == n + 1 : 2 * static_cast<std::uint64_t>(d_->a) == n + 1ull;
    if (!ok) invalid("no differential t^" + std::to_string(d_->a) + " from degree " + std::to_string(n));
    if (!data_.empty()) invalid("nonsplit model: g_n does not survive, so it carries no operations");
  }
  for (auto it = data_.begin(); it != data_.end();) {
    const auto& [op, val] = *it;
    if (val.prime() != p) invalid("operation data over the wrong prime");
    if (op == 0 && p == 2) invalid("for p = 2 the Bockstein is Sq^1; give it as Sq1");
    if (op > max_operation()) invalid("instability: P^" + std::to_string(op) + " vanishes in degree " + std::to_string(n));
    const std::int64_t shift = op == 0 ? 1 : static_cast<std::int64_t>(op) * (p - 1) * t_degree();
    for (const auto& [c, v] : val.terms()) {
      if (c.t < 0) invalid("operation data must lie in HE, not its localization");
      if (val.degree_of(c, n) != static_cast<std::int64_t>(n) + shift)
        invalid("term " + monomial_string(c) + "*" + fixloc::to_string(c.gen) + " has the wrong degree for " +
                (op == 0 ? std::string("beta") : "P^" + std::to_string(op)));
    }
    if (val.is_zero())
      it = data_.erase(it);
    else
      ++it;
  }
  // Adem spot check: beta beta g_n = 0
  if (p != 2 && data_.count(0)) {
    LocalElement g(p);
    g.add({0, 0, Gen::Fiber}, 1);
    const LocalElement bb = apply_bockstein(*this, apply_bockstein(*this, g));
    if (!bb.is_zero()) invalid("beta^2(g_n) = " + bb.to_string() + " is not zero");
  }
}

TwoRowModule TwoRowModule::trivial(std::uint32_t p, std::uint32_t n) { return TwoRowModule(p, n, std::nullopt); }

TwoRowModule TwoRowModule::nonsplit(std::uint32_t p, std::uint32_t n, std::uint32_t lambda) {
  return TwoRowModule(p, n, Differential{lambda, p == 2 ? n + 1 : (n + 1) / 2});
}

TwoRowModule TwoRowModule::representation_sphere(std::uint32_t p, std::uint32_t k, std::uint32_t l) {
  const std::uint32_t ldim = p == 2 ? 1 : 2;
  if (k + l == 0) invalid("the empty representation has no unit sphere");
  const std::uint32_t n = k + ldim * l - 1;
  if (k == 0) return nonsplit(p, n);
  // P(g_n) = (1 + t^(p-1))^l g_n
  SteenrodData data;
  for (std::uint32_t i = 1; i <= l; ++i) {
    LocalElement e(p);
    e.add({static_cast<std::int64_t>(i) * (p - 1), 0, Gen::Fiber}, fp::binomial(l, i, p));
    if (!e.is_zero()) data.emplace(i, e);
  }
  return TwoRowModule(p, n, std::nullopt, std::move(data));
}

LocalElement TwoRowModule::operation_on_fiber(std::uint32_t op) const {
  auto it = data_.find(op);
  return it == data_.end() ? LocalElement(p_) : it->second;
}

std::string TwoRowModule::describe() const {
  std::ostringstream os;
  os << "two-row model p=" << p_ << " n=" << n_;
  if (d_)
    os << " d(g_n)=" << d_->lambda << "*t^" << d_->a;
  else
    os << " split";
  for (const auto& [op, v] : data_) os << "; " << (op == 0 ? std::string("beta") : (p_ == 2 ? "Sq" : "P") + std::to_string(op)) << "(g_n)=" << v.to_string();
  return os.str();
}

HePresentation he_presentation(const TwoRowModule& m, std::uint32_t max_degree) {
  HePresentation out;
  out.dims.assign(max_degree + 1, 0);
  const std::uint32_t n = m.fiber_degree();
  if (m.split()) {
    // free on g0 and g_n, H(Z/p) has rank one in every degree
    for (std::uint32_t k = 0; k <= max_degree; ++k) out.dims[k] = 1 + (k >= n ? 1 : 0);
    out.description = "free H(Z/" + std::to_string(m.prime()) + ")-module on g0 (degree 0) and g_n (degree " +
                      std::to_string(n) + ")";
    return out;
  }
  out.free = false;
  // coker of multiplication by t^a, ker is zero: classes in degrees 0..n
  for (std::uint32_t k = 0; k <= max_degree && k <= n; ++k) out.dims[k] = 1;
  const auto a = std::to_string(m.differential()->a);
  const auto p = std::to_string(m.prime());
  out.description = m.prime() == 2 ? "F_2[t]/(t^" + a + ")" : "Lambda(s) (x) F_" + p + "[t]/(t^" + a + ")";
  return out;
}

LocalElement apply_power(const TwoRowModule& m, std::uint32_t i, const LocalElement& f) {
  const std::uint32_t p = m.prime();
  LocalElement out(p);
  if (i == 0) return f;
  for (const auto& [c, v] : f.terms()) {
    const std::uint32_t top = c.gen == Gen::Fiber ? std::min(i, m.max_operation()) : 0;
    for (std::uint32_t b = 0; b <= top; ++b) {
      const std::uint32_t a = i - b;
      const std::uint32_t bin = fp::binomial_signed(c.t, a, p);
      if (bin == 0) continue;
      const std::int64_t t = c.t + static_cast<std::int64_t>(a) * (p - 1);
      const std::uint32_t coeff = fp::mul(v, bin, p);
      if (b == 0) {
        out.add({t, c.s, c.gen}, coeff);
        continue;
      }
      const LocalElement data = m.operation_on_fiber(b);
      for (const auto& [dc, dv] : data.terms()) {
        if (c.s && dc.s) continue;
        out.add({t + dc.t, static_cast<std::uint8_t>(c.s | dc.s), dc.gen}, fp::mul(coeff, dv, p));
      }
    }
  }
  return out;
}

LocalElement apply_bockstein(const TwoRowModule& m, const LocalElement& f) {
  const std::uint32_t p = m.prime();
  if (p == 2) return apply_power(m, 1, f);
  LocalElement out(p);
  const LocalElement bg = m.operation_on_fiber(0);
  for (const auto& [c, v] : f.terms()) {
    // beta(t^k s) = t^(k+1)
    if (c.s) out.add({c.t + 1, 0, c.gen}, v);
    if (c.gen != Gen::Fiber) continue;
    const std::int64_t sign = c.s ? -1 : 1;
    for (const auto& [dc, dv] : bg.terms()) {
      if (c.s && dc.s) continue;
      out.add({c.t + dc.t, static_cast<std::uint8_t>(c.s | dc.s), dc.gen}, sign * static_cast<std::int64_t>(fp::mul(v, dv, p)));
    }
  }
  return out;
}

std::uint64_t default_pole_bound(std::uint32_t n) { return 2ull * (n + 1); }

std::uint64_t operation_bound(std::uint32_t p, std::uint32_t n, std::uint64_t pole_bound) {
  return (n + 2 * pole_bound) * p;
}

FixResult fix_rank(const TwoRowModule& m, std::optional<std::uint64_t> pole_bound) {
  FixResult out;
  if (!m.split()) return out;  // t nilpotent, the localization is zero
  const std::uint32_t p = m.prime(), n = m.fiber_degree();
  out.pole_bound = pole_bound.value_or(default_pole_bound(n));
  out.checked_ops = operation_bound(p, n, out.pole_bound);

  for (std::int64_t r = n; r >= 0; --r) {
    const Cell fiber = cell_in_degree(p, r, Gen::Fiber, n);
    if (static_cast<std::uint64_t>(std::max<std::int64_t>(0, -fiber.t)) > out.pole_bound) continue;
    const Cell unit = cell_in_degree(p, r, Gen::Unit, n);
    LocalElement fu(p), ff(p);
    fu.add(unit, 1);
    ff.add(fiber, 1);
    // f = c*unit + fiber; each operation gives c*A + B = 0
    std::vector<std::pair<LocalElement, LocalElement>> eqs;
    if (p != 2) eqs.push_back({apply_bockstein(m, fu), apply_bockstein(m, ff)});
    for (std::uint64_t i = 1; i <= out.checked_ops; ++i)
      eqs.push_back({apply_power(m, static_cast<std::uint32_t>(i), fu), apply_power(m, static_cast<std::uint32_t>(i), ff)});
    std::vector<std::uint32_t> good;
    for (std::uint32_t c = 0; c < p; ++c) {
      bool ok = true;
      for (const auto& [A, B] : eqs) {
        LocalElement e = A.scaled(c);
        e += B;
        if (!e.is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) good.push_back(c);
    }
    if (good.empty()) continue;
    LocalElement w = fu.scaled(good.front());
    w += ff;
    out.rank = static_cast<int>(r);
    out.witness = w;
    // all p corrections work iff the unit cell is itself annihilated, which
    // happens only for g0 in degree 0
    out.unique = good.size() == 1 || (r == 0 && good.size() == p);
    return out;
  }
  throw Error(ErrorKind::NoWitnessFound, "no annihilated class in degrees 0.." + std::to_string(n) + " with pole bound " +
                                             std::to_string(out.pole_bound) + "; raise the bound or check the model");
}

namespace {

steenrod::Monomial to_rank_one(const Cell& c) {
  return {static_cast<std::uint32_t>(c.t), 0, c.s, 0};
}

// coefficients per generator as elements of H(Z/p)
std::map<Gen, GradedElement> split_by_gen(const LocalElement& f) {
  std::map<Gen, GradedElement> out;
  for (Gen g : {Gen::Unit, Gen::Fiber}) out.emplace(g, GradedElement(f.prime(), 1));
  for (const auto& [c, v] : f.terms()) {
    if (c.t < 0) throw Error(ErrorKind::DomainMismatch, "clear denominators first");
    out.at(c.gen).add_term(to_rank_one(c), v);
  }
  return out;
}

}  // namespace

bool verify_witness(const TwoRowModule& m, const LocalElement& f, std::uint64_t max_op) {
  const std::uint32_t p = m.prime();
  // t^N with N a power of p: P(t^N) = t^N + t^(Np), so f is annihilated iff
  // P^i(t^N f) vanishes for i != N and P^N(t^N f) = t^(Np) f
  std::uint64_t N = 1;
  while (N < f.pole_order()) N *= p;
  const auto coeffs = split_by_gen(f.shifted(static_cast<std::int64_t>(N)));
  const auto top = split_by_gen(f.shifted(static_cast<std::int64_t>(N * p)));

  std::map<std::uint32_t, std::map<Gen, GradedElement>> data;
  for (const auto& [op, v] : m.steenrod_data()) data.emplace(op, split_by_gen(v));

  auto zero = [&](const std::map<Gen, GradedElement>& r) {
    return std::all_of(r.begin(), r.end(), [](const auto& kv) { return kv.second.is_zero(); });
  };
  auto fresh = [&] {
    std::map<Gen, GradedElement> r;
    for (Gen g : {Gen::Unit, Gen::Fiber}) r.emplace(g, GradedElement(p, 1));
    return r;
  };

  if (p != 2) {
    auto r = fresh();
    for (const auto& [g, c] : coeffs) {
      r.at(g) += steenrod::bockstein(c);
      auto it = data.find(0);
      if (g != Gen::Fiber || it == data.end() || c.is_zero()) continue;
      const GradedElement signed_c = c.degree() % 2 ? -c : c;
      for (const auto& [g2, h] : it->second) r.at(g2) += signed_c * h;
    }
    if (!zero(r)) return false;
  }
  for (std::uint64_t i = 1; i <= max_op + N; ++i) {
    auto r = fresh();
    for (const auto& [g, c] : coeffs) {
      r.at(g) += steenrod::steenrod_power(static_cast<std::uint32_t>(i), c);
      if (g != Gen::Fiber) continue;
      for (const auto& [b, dg] : data) {
        if (b == 0 || b > i) continue;
        const GradedElement pc = steenrod::steenrod_power(static_cast<std::uint32_t>(i - b), c);
        for (const auto& [g2, h] : dg) r.at(g2) += pc * h;
      }
    }
    if (i == N)
      for (const auto& [g, c] : top) r.at(g) -= c;
    if (!zero(r)) return false;
  }
  return true;
}

namespace {

// scalars c_i with P^i g_n = c_i t^(i(p-1)) g_n, plus the Bockstein scalar
struct Diagonal {
  std::map<std::uint32_t, std::uint32_t> c;
  std::uint32_t beta = 0;
};

Diagonal diagonal_data(const TwoRowModule& m) {
  Diagonal out;
  for (const auto& [op, v] : m.steenrod_data()) {
    for (const auto& [cell, val] : v.terms()) {
      if (cell.gen != Gen::Fiber || (op != 0 && cell.s))
        invalid("join model needs operations sending g_n into H(Z/p) g_n without exterior or g0 terms");
      if (op == 0)
        out.beta = val;
      else
        out.c[op] = val;
    }
  }
  return out;
}

}  // namespace

TwoRowModule join(const TwoRowModule& a, const TwoRowModule& b) {
  if (a.prime() != b.prime()) invalid("joining models over different primes");
  const std::uint32_t p = a.prime();
  const std::uint32_t n = a.fiber_degree() + b.fiber_degree() + 1;
  if (!a.split() && !b.split()) {
    // Euler classes multiply
    const Differential d{fp::mul(a.differential()->lambda, b.differential()->lambda, p),
                         a.differential()->a + b.differential()->a};
    return TwoRowModule(p, n, d);
  }
  if (a.split() != b.split()) invalid("join of a split and a nonsplit model is not modelled");
  Diagonal da = diagonal_data(a), db = diagonal_data(b);
  da.c[0] = 1;
  db.c[0] = 1;
  std::map<std::uint32_t, std::uint32_t> c;
  for (const auto& [i, x] : da.c)
    for (const auto& [j, y] : db.c) c[i + j] = fp::add(c[i + j], fp::mul(x, y, p), p);
  SteenrodData data;
  for (const auto& [i, x] : c) {
    if (i == 0 || x == 0) continue;
    LocalElement e(p);
    e.add({static_cast<std::int64_t>(i) * (p - 1), 0, Gen::Fiber}, x);
    data.emplace(i, e);
  }
  // beta(g_a * g_b) = beta(g_a) g_b + (-1)^(n_a + 1) g_a beta(g_b)
  const std::int64_t sign = (a.fiber_degree() + 1) % 2 ? -1 : 1;
  const std::int64_t beta = static_cast<std::int64_t>(da.beta) + sign * static_cast<std::int64_t>(db.beta);
  if (fp::reduce(beta, p) != 0) {
    LocalElement e(p);
    e.add({0, 1, Gen::Fiber}, beta);
    data.emplace(0, e);
  }
  return TwoRowModule(p, n, std::nullopt, std::move(data));
}

TwoRowModule join_power(const TwoRowModule& a, std::uint32_t m) {
  if (m == 0) invalid("join power needs m >= 1");
  TwoRowModule out = a;
  for (std::uint32_t i = 1; i < m; ++i) out = join(out, a);
  return out;
}

std::vector<int> fix_tensor_rule(int r1, int r2) {
  if (r1 < -1 || r2 < -1) throw Error(ErrorKind::DomainMismatch, "ranks are at least -1");
  if (r1 == -1 || r2 == -1) return {};
  std::vector<int> out{0, r1, r2, r1 + r2};
  std::sort(out.begin(), out.end());
  return out;
}

int fix_join_rule(int r1, int r2) {
  if (r1 < -1 || r2 < -1) throw Error(ErrorKind::DomainMismatch, "ranks are at least -1");
  return r1 + r2 + 1;
}

int iterated_join_rank(int r, std::uint32_t m) {
  if (m == 0) throw Error(ErrorKind::DomainMismatch, "join power needs m >= 1");
  int out = r;
  for (std::uint32_t i = 1; i < m; ++i) out = fix_join_rule(out, r);
  return out;
}

std::int64_t euler_join(const std::vector<std::int64_t>& degrees) {
  std::int64_t out = 0;
  for (auto d : degrees) out += d;
  return out;
}

GradedElement euler_join(const std::vector<GradedElement>& classes) {
  if (classes.empty()) throw Error(ErrorKind::DomainMismatch, "empty join");
  GradedElement out = GradedElement::constant(classes.front().prime(), 1, classes.front().rank());
  for (const auto& e : classes) {
    if (!e.is_homogeneous()) throw Error(ErrorKind::Inhomogeneous, e.to_string() + " is not homogeneous");
    out = out * e;
  }
  return out;
}

EulerPower euler_join_power(const GradedElement& e, std::uint32_t m) {
  if (!e.is_homogeneous()) throw Error(ErrorKind::Inhomogeneous, e.to_string() + " is not homogeneous");
  return {e.pow(m), e.polynomial_part().is_zero()};
}

}  // namespace qdp::fixloc

#include "qdp/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::group {

namespace {

// Ascending greedy generating set: add every element not yet in the closure.
std::vector<Element> greedy_generators(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Element> gens;
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  for (Element cand = 0; cand < n && members.size() < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    // Re-close: right-multiply everything by every generator until stable.
    std::deque<Element> queue(members.begin(), members.end());
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        Element y = g.mul(x, s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::size_t n, std::vector<Element> table, std::string name) {
  if (n == 0) throw Error(ErrorKind::MalformedInput, "group must be nonempty");
  if (table.size() != n * n) throw Error(ErrorKind::MalformedInput, "multiplication table must be n*n");
  for (Element x : table)
    if (x >= n) throw Error(ErrorKind::MalformedInput, "table entry out of range");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->name_ = std::move(name);

  // Every row and column must be a permutation.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row[g->table_[a * n + b]] = 1;
      col[g->table_[b * n + a]] = 1;
    }
    if (std::count(row.begin(), row.end(), 0) || std::count(col.begin(), col.end(), 0))
      throw Error(ErrorKind::MalformedInput, "table is not a Latin square");
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = g->mul(e, a) == a && g->mul(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::MalformedInput, "no two-sided identity");
  g->identity_ = *identity;

  g->inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g->mul(a, b) == g->identity_) {
        if (g->mul(b, a) != g->identity_) throw Error(ErrorKind::MalformedInput, "inverse is not two-sided");
        g->inverse_[a] = b;
        break;
      }
    }
  }
  g->finish_setup();
  return g;
}

GroupPtr FiniteGroup::from_qd(QdOrigin origin) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::uint32_t p = origin.p, pp = p * p;
  const auto& mats = origin.matrices;
  const std::size_t m = mats.size();
  g->n_ = m * pp;
  g->name_ = "Qd(" + std::to_string(p) + ")";

  std::map<Mat2, std::uint32_t> index;
  for (std::uint32_t i = 0; i < m; ++i) index[mats[i]] = i;
  auto matmul = [p](const Mat2& x, const Mat2& y) {
    return Mat2{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  g->qd_mat_mul_.resize(m * m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) g->qd_mat_mul_[i * m + j] = index.at(matmul(mats[i], mats[j]));
  g->qd_act_.resize(m * pp);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Mat2& a = mats[i];
    for (std::uint32_t w0 = 0; w0 < p; ++w0)
      for (std::uint32_t w1 = 0; w1 < p; ++w1)
        g->qd_act_[i * pp + w0 * p + w1] = ((a[0] * w0 + a[1] * w1) % p) * p + (a[2] * w0 + a[3] * w1) % p;
  }
  g->qd_vec_add_.resize(pp * pp);
  for (std::uint32_t v = 0; v < pp; ++v)
    for (std::uint32_t w = 0; w < pp; ++w)
      g->qd_vec_add_[v * pp + w] = ((v / p + w / p) % p) * p + (v % p + w % p) % p;

  const std::uint32_t id_mat = index.at(Mat2{1, 0, 0, 1});
  g->identity_ = id_mat * pp;
  g->qd_ = std::move(origin);

  // (v, A)^-1 = (-A^-1 v, A^-1)
  g->inverse_.resize(g->n_);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Mat2& a = g->qd_->matrices[i];
    const Mat2 ainv{a[3], (p - a[1]) % p, (p - a[2]) % p, a[0]};
    const std::uint32_t j = index.at(ainv);
    for (std::uint32_t v = 0; v < pp; ++v) {
      const std::uint32_t w = g->qd_act_[j * pp + v];
      const std::uint32_t negw = ((p - w / p) % p) * p + (p - w % p) % p;
      g->inverse_[i * pp + v] = j * pp + negw;
    }
  }
  g->finish_setup();
  return g;
}

void FiniteGroup::finish_setup() {
  if (qd_) {
    // SL_2 is generated by the two elementary unipotents; together they move
    // e1 to (1,1), so e1 generates the translations.
    generators_ = {qd_element(1, 0, {1, 0, 0, 1}), qd_element(0, 0, {1, 1, 0, 1}), qd_element(0, 0, {1, 0, 1, 1})};
    std::sort(generators_.begin(), generators_.end());
  } else {
    generators_ = greedy_generators(*this);
  }
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  Element result = identity_, base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element s : generators_)
    for (Element t : generators_)
      if (!commute(s, t)) return false;
  return true;
}

Element FiniteGroup::qd_element(std::uint32_t v0, std::uint32_t v1, const Mat2& a) const {
  if (!qd_) throw Error(ErrorKind::DomainMismatch, "not a Qd(p) group");
  const std::uint32_t p = qd_->p;
  auto it = std::lower_bound(qd_->matrices.begin(), qd_->matrices.end(), a);
  if (it == qd_->matrices.end() || *it != a) throw Error(ErrorKind::NotUnimodular, "matrix not in SL_2");
  return static_cast<Element>(it - qd_->matrices.begin()) * p * p + (v0 % p) * p + v1 % p;
}

std::pair<std::array<std::uint32_t, 2>, Mat2> FiniteGroup::qd_decode(Element e) const {
  if (!qd_) throw Error(ErrorKind::DomainMismatch, "not a Qd(p) group");
  const std::uint32_t p = qd_->p, pp = p * p;
  return {{(e % pp) / p, e % p}, qd_->matrices[e / pp]};
}

std::string FiniteGroup::describe(Element e) const {
  if (!qd_) return std::to_string(e);
  auto [v, a] = qd_decode(e);
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "|" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
  return os.str();
}

std::vector<Element> FiniteGroup::table() const {
  if (!qd_) return table_;
  std::vector<Element> t(n_ * n_);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) t[static_cast<std::size_t>(a) * n_ + b] = mul(a, b);
  return t;
}

bool FiniteGroup::verify_associativity(std::size_t exhaustive_limit) const {
  if (n_ <= exhaustive_limit) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }
  for (Element s : generators_)
    for (Element x = 0; x < n_; ++x) {
      const Element xs = mul(x, s);
      for (Element y = 0; y < n_; ++y)
        if (mul(xs, y) != mul(x, mul(s, y))) return false;
    }
  return true;
}

GroupPtr construct_qdp(std::uint32_t p, std::size_t size_guard) {
  if (!fp::is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  const std::uint64_t order = static_cast<std::uint64_t>(p) * p * p * (static_cast<std::uint64_t>(p) * p - 1);
  if (order > size_guard)
    throw Error(ErrorKind::SizeGuard,
                "Qd(" + std::to_string(p) + ") has order " + std::to_string(order) + " > guard " +
                    std::to_string(size_guard));
  QdOrigin origin;
  origin.p = p;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1) origin.matrices.push_back({a, b, c, d});
  return FiniteGroup::from_qd(std::move(origin));
}

GroupPtr cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t), "Z" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>(a->mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                          b->mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  return FiniteGroup::from_table(n, std::move(t), a->name() + "x" + b->name());
}

GroupPtr elementary_abelian(std::uint32_t p, std::size_t rank) {
  GroupPtr g = cyclic(p);
  for (std::size_t i = 1; i < rank; ++i) g = direct_product(g, cyclic(p));
  if (rank == 0) g = cyclic(1);
  return g;
}

GroupPtr metacyclic(std::size_t m, std::size_t s, std::size_t t, std::size_t r, std::string name) {
  if (m == 0 || s == 0) throw Error(ErrorKind::MalformedInput, "metacyclic: m, s must be positive");
  if (std::gcd(r, m) != 1) throw Error(ErrorKind::MalformedInput, "metacyclic: r must be a unit mod m");
  std::vector<std::size_t> rpow(s + 1, 1 % m);
  for (std::size_t j = 1; j <= s; ++j) rpow[j] = rpow[j - 1] * r % m;
  if (rpow[s] != 1 % m || (r * t) % m != t % m)
    throw Error(ErrorKind::MalformedInput, "metacyclic: inconsistent parameters");
  const std::size_t n = m * s;
  std::vector<Element> tab(n * n);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < s; ++l)
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t ai = (i + rpow[j] * k) % m, bj = j + l;
          if (bj >= s) {
            bj -= s;
            ai = (ai + t) % m;
          }
          tab[(j * m + i) * n + (l * m + k)] = static_cast<Element>(bj * m + ai);
        }
  return FiniteGroup::from_table(n, std::move(tab), std::move(name));
}

GroupPtr dihedral(std::size_t order) {
  return metacyclic(order / 2, 2, 0, order / 2 - 1, "D" + std::to_string(order));
}

GroupPtr generalized_quaternion(std::size_t order) {
  return metacyclic(order / 2, 2, order / 4, order / 2 - 1, "Q" + std::to_string(order));
}

GroupPtr semidihedral(std::size_t order) {
  return metacyclic(order / 2, 2, 0, order / 4 - 1, "SD" + std::to_string(order));
}

GroupPtr modular_2group(std::size_t order) {
  return metacyclic(order / 2, 2, 0, order / 4 + 1, "M" + std::to_string(order));
}

GroupPtr heisenberg(std::uint32_t p) {
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      t[x * n + y] = static_cast<Element>(((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p);
    }
  return FiniteGroup::from_table(n, std::move(t), "Heis(" + std::to_string(p) + ")");
}

GroupPtr symmetric(std::size_t degree) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::uint8_t>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t n = perms.size();
  std::vector<Element> t(n * n);
  std::vector<std::uint8_t> comp(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < degree; ++i) comp[i] = perms[a][perms[b][i]];
      t[a * n + b] = index.at(comp);
    }
  return FiniteGroup::from_table(n, std::move(t), "S" + std::to_string(degree));
}

namespace {

// Extends an assignment of generator images to the subgroup they generate.
// Returns false on inconsistency. `image` uses n as "unassigned".
bool extend_hom(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                const std::vector<Element>& imgs, std::vector<Element>& image) {
  const Element unset = static_cast<Element>(g.order());
  image.assign(g.order(), unset);
  image[g.identity()] = h.identity();
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      Element y = g.mul(x, gens[i]);
      Element iy = h.mul(image[x], imgs[i]);
      if (image[y] == unset) {
        image[y] = iy;
        queue.push_back(y);
      } else if (image[y] != iy) {
        return false;
      }
    }
  }
  return true;
}

bool search_iso(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                std::vector<Element>& imgs, std::vector<Element>& image) {
  if (!extend_hom(g, h, gens, imgs, image)) return false;
  if (imgs.size() == gens.size()) {
    std::vector<char> hit(h.order(), 0);
    for (Element y : image) {
      if (y >= h.order() || hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }
  const std::size_t want = g.element_order(gens[imgs.size()]);
  for (Element cand = 0; cand < h.order(); ++cand) {
    if (h.element_order(cand) != want) continue;
    imgs.push_back(cand);
    if (search_iso(g, h, gens, imgs, image)) return true;
    imgs.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<Element> gens = g.generators(), imgs, image;
  if (search_iso(g, h, gens, imgs, image)) return image;
  return std::nullopt;
}

}  // namespace qdp::group

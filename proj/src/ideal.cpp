#include "qdp/ideal.hpp"

#include "qdp/error.hpp"
#include "qdp/fp.hpp"

namespace qdp::steenrod {

IdealHandle::IdealHandle(std::uint32_t p, std::vector<GradedElement> generators, int rank,
                         std::uint32_t degree_budget)
    : p_(p), rank_(rank), budget_(degree_budget) {
  for (auto& g : generators) {
    if (g.prime() != p) throw Error(ErrorKind::PrimeMismatch, "generator over a different prime");
    if (g.rank() != rank) throw Error(ErrorKind::DomainMismatch, "generator of a different rank");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorKind::Inhomogeneous, g.to_string() + " is not homogeneous");
    gens_.push_back(std::move(g));
  }
}

const IdealHandle::Echelon& IdealHandle::basis(std::uint32_t deg) const {
  if (deg > budget_)
    throw Error(ErrorKind::DegreeBudget, "degree " + std::to_string(deg) + " exceeds budget " + std::to_string(budget_));
  std::lock_guard lock(mutex_);
  auto it = cache_.find(deg);
  if (it != cache_.end()) return *it->second;

  auto ech = std::make_unique<Echelon>();
  ech->monomials = monomials_of_degree(p_, rank_, deg);
  for (std::size_t i = 0; i < ech->monomials.size(); ++i) ech->index[ech->monomials[i]] = i;
  const std::size_t n = ech->monomials.size();
  const std::uint32_t p = p_;
  for (const auto& g : gens_) {
    const std::uint32_t gd = g.degree();
    if (gd > deg) continue;
    for (const auto& m : monomials_of_degree(p_, rank_, deg - gd)) {
      const GradedElement prod = multiply(GradedElement::monomial(p_, m, 1, rank_), g);
      std::vector<std::uint32_t> row(n, 0);
      for (const auto& [mono, c] : prod.terms()) row[ech->index.at(mono)] = c;
      for (std::size_t r = 0; r < ech->rows.size(); ++r) {
        const std::uint32_t f = row[ech->pivots[r]];
        if (f == 0) continue;
        const auto& br = ech->rows[r];
        for (std::size_t j = 0; j < n; ++j)
          if (br[j]) row[j] = fp::sub(row[j], fp::mul(f, br[j], p), p);
      }
      std::size_t lead = 0;
      while (lead < n && row[lead] == 0) ++lead;
      if (lead == n) continue;
      const std::uint32_t inv = fp::inv(row[lead], p);
      for (auto& x : row) x = fp::mul(x, inv, p);
      ech->rows.push_back(std::move(row));
      ech->pivots.push_back(lead);
    }
  }
  const Echelon& ref = *ech;
  cache_.emplace(deg, std::move(ech));
  return ref;
}

bool IdealHandle::contains(const GradedElement& a) const {
  if (a.prime() != p_) throw Error(ErrorKind::PrimeMismatch, "element over a different prime");
  if (a.is_zero()) return true;
  const std::uint32_t deg = a.degree();
  const Echelon& ech = basis(deg);
  std::vector<std::uint32_t> vec(ech.monomials.size(), 0);
  for (const auto& [m, c] : a.terms()) vec[ech.index.at(m)] = c;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const std::uint32_t f = vec[ech.pivots[r]];
    if (f == 0) continue;
    const auto& br = ech.rows[r];
    for (std::size_t j = 0; j < vec.size(); ++j)
      if (br[j]) vec[j] = fp::sub(vec[j], fp::mul(f, br[j], p_), p_);
  }
  for (auto x : vec)
    if (x) return false;
  return true;
}

std::size_t IdealHandle::dimension(std::uint32_t deg) const { return basis(deg).rows.size(); }

bool ideal_membership(const GradedElement& a, const IdealHandle& ideal) { return ideal.contains(a); }

ClosureResult is_steenrod_closed(const IdealHandle& ideal) {
  ClosureResult out;
  const std::uint32_t p = ideal.prime();
  const bool squares = p == 2 && ideal.rank() == 1;
  auto check = [&](std::size_t gi, const std::string& op, const GradedElement& image) {
    if (out.witness) return;
    try {
      if (!ideal.contains(image)) out.witness = std::make_pair(gi, op);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeBudget) throw;
      out.budget_limited = true;
    }
  };
  const auto& gens = ideal.generators();
  for (std::size_t gi = 0; gi < gens.size() && !out.witness; ++gi) {
    const std::uint32_t deg = gens[gi].degree();
    if (squares) {
      for (std::uint32_t i = 1; i <= deg; ++i) check(gi, "Sq^" + std::to_string(i), steenrod_power(i, gens[gi]));
      continue;
    }
    check(gi, "beta", bockstein(gens[gi]));
    for (std::uint32_t i = 1; 2 * i <= deg; ++i)
      check(gi, "P^" + std::to_string(i), steenrod_power(i, gens[gi]));
  }
  out.closed = !out.witness && !out.budget_limited;
  return out;
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Infinite: return "infinite";
    case Finiteness::BudgetLimited: return "budget-limited";
  }
  return "budget-limited";
}

FinitenessResult quotient_finite_dimensional(const IdealHandle& ideal) {
  if (ideal.rank() != 2) throw Error(ErrorKind::DomainMismatch, "finiteness test is for the rank-two ring");
  const std::uint32_t p = ideal.prime();
  FinitenessResult out;

  // A common zero of the polynomial parts survives in every element of the
  // image of I in F_p[x,y], so x^N or y^N is never in I.
  auto eval = [p](const GradedElement& f, std::uint32_t a, std::uint32_t b) {
    std::uint32_t sum = 0;
    const GradedElement poly = f.polynomial_part();
    for (const auto& [m, c] : poly.terms())
      sum = fp::add(sum, fp::mul(c, fp::mul(fp::pow(a, m.a, p), fp::pow(b, m.b, p), p), p), p);
    return sum;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points{{1, 0}};
  for (std::uint32_t c = 0; c < p; ++c) points.push_back({c, 1});
  for (const auto& [a, b] : points) {
    bool all_zero = true;
    for (const auto& g : ideal.generators())
      if (eval(g, a, b) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      out.verdict = Finiteness::Infinite;
      out.common_zero = std::make_pair(a, b);
      return out;
    }
  }

  auto first_power = [&](const GradedElement& var) -> std::optional<std::uint32_t> {
    for (std::uint32_t n = 1; 2 * n <= ideal.degree_budget(); ++n)
      if (ideal.contains(var.pow(n))) return n;
    return std::nullopt;
  };
  const auto nx = first_power(GradedElement::x(p));
  const auto ny = nx ? first_power(GradedElement::y(p)) : std::nullopt;
  if (nx && ny) {
    out.verdict = Finiteness::Finite;
    out.exponent = std::max(*nx, *ny);
  }
  return out;
}

}  // namespace qdp::steenrod

#include "qdp/int_solver.hpp"

#include <algorithm>
#include <set>

#include "qdp/error.hpp"

namespace qdp::dimfun {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

std::size_t IntSolver::add_variable(std::string name, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorKind::DomainMismatch, "empty domain for " + name);
  names_.push_back(std::move(name));
  lo_.push_back(lo);
  hi_.push_back(hi);
  return names_.size() - 1;
}

void IntSolver::add(Constraint c) {
  for (const auto& t : c.terms)
    if (t.var >= names_.size()) throw Error(ErrorKind::DomainMismatch, "unknown variable in " + c.label);
  constraints_.push_back(std::move(c));
}

void IntSolver::add_eq(std::vector<Term> terms, std::int64_t rhs, std::string label) {
  add({Kind::Eq, std::move(terms), rhs, std::move(label)});
}
void IntSolver::add_le(std::vector<Term> terms, std::int64_t rhs, std::string label) {
  add({Kind::Le, std::move(terms), rhs, std::move(label)});
}
void IntSolver::add_even(std::vector<Term> terms, std::int64_t rhs, std::string label) {
  add({Kind::Even, std::move(terms), rhs, std::move(label)});
}

// Tightens bounds of sum(c_i x_i) <= rhs. Returns false on an empty domain.
bool IntSolver::propagate(std::vector<Domain>& dom, std::size_t& failed) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
      const Constraint& c = constraints_[ci];
      auto tighten_le = [&](const std::vector<Term>& terms, std::int64_t rhs) {
        // min of sum
        std::int64_t min_sum = 0;
        for (const auto& t : terms) min_sum += t.coeff > 0 ? t.coeff * dom[t.var].lo : t.coeff * dom[t.var].hi;
        if (min_sum > rhs) return false;
        for (const auto& t : terms) {
          const std::int64_t own = t.coeff > 0 ? t.coeff * dom[t.var].lo : t.coeff * dom[t.var].hi;
          const std::int64_t slack = rhs - (min_sum - own);
          Domain& d = dom[t.var];
          if (t.coeff > 0) {
            const std::int64_t nh = floor_div(slack, t.coeff);
            if (nh < d.hi) {
              d.hi = nh;
              d.hi_reason = ci;
              changed = true;
            }
          } else if (t.coeff < 0) {
            const std::int64_t nl = ceil_div(slack, t.coeff);
            if (nl > d.lo) {
              d.lo = nl;
              d.lo_reason = ci;
              changed = true;
            }
          }
          if (d.lo > d.hi) return false;
        }
        return true;
      };
      bool ok = true;
      switch (c.kind) {
        case Kind::Le: ok = tighten_le(c.terms, c.rhs); break;
        case Kind::Eq: {
          ok = tighten_le(c.terms, c.rhs);
          if (ok) {
            std::vector<Term> negated = c.terms;
            for (auto& t : negated) t.coeff = -t.coeff;
            ok = tighten_le(negated, -c.rhs);
          }
          break;
        }
        case Kind::Even: {
          // Only decidable once every variable but one is fixed.
          std::size_t open = 0, open_var = npos;
          std::int64_t fixed = -c.rhs, open_coeff = 0;
          for (const auto& t : c.terms) {
            if (dom[t.var].lo == dom[t.var].hi) {
              fixed += t.coeff * dom[t.var].lo;
            } else {
              ++open;
              open_var = t.var;
              open_coeff = t.coeff;
            }
          }
          if (open == 0) {
            ok = fixed % 2 == 0;
          } else if (open == 1 && open_coeff % 2 != 0) {
            // x must have the parity of `fixed`
            Domain& d = dom[open_var];
            const std::int64_t want = ((fixed % 2) + 2) % 2;
            if (((d.lo % 2) + 2) % 2 != want) {
              ++d.lo;
              d.lo_reason = ci;
              changed = true;
            }
            if (((d.hi % 2) + 2) % 2 != want) {
              --d.hi;
              d.hi_reason = ci;
              changed = true;
            }
            ok = d.lo <= d.hi;
          }
          break;
        }
      }
      if (!ok) {
        failed = ci;
        return false;
      }
    }
  }
  return true;
}

IntSolver::Result IntSolver::solve() const {
  Result result;
  std::vector<Domain> root(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) root[i] = {lo_[i], hi_[i], npos, npos};
  std::size_t failed = npos;
  if (!propagate(root, failed)) {
    result.refuted_by_propagation = true;
    std::set<std::string> labels{constraints_[failed].label};
    for (const auto& t : constraints_[failed].terms) {
      if (root[t.var].lo_reason != npos) labels.insert(constraints_[root[t.var].lo_reason].label);
      if (root[t.var].hi_reason != npos) labels.insert(constraints_[root[t.var].hi_reason].label);
    }
    result.conflict.assign(labels.begin(), labels.end());
    result.nodes = 1;
    return result;
  }
  auto dfs = [&](auto&& self, std::vector<Domain> dom) -> bool {
    ++result.nodes;
    std::size_t f = npos;
    if (!propagate(dom, f)) return false;
    std::size_t var = npos;
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (dom[i].lo != dom[i].hi) {
        var = i;
        break;
      }
    if (var == npos) {
      std::vector<std::int64_t> vals;
      for (const auto& d : dom) vals.push_back(d.lo);
      if (!violated(vals).empty()) return false;
      result.solution = std::move(vals);
      return true;
    }
    for (std::int64_t v = dom[var].lo; v <= dom[var].hi; ++v) {
      std::vector<Domain> next = dom;
      next[var].lo = next[var].hi = v;
      if (self(self, std::move(next))) return true;
    }
    return false;
  };
  result.satisfiable = dfs(dfs, root);
  return result;
}

std::vector<std::string> IntSolver::violated(const std::vector<std::int64_t>& values) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < lo_[i] || values[i] > hi_[i]) out.push_back("domain of " + names_[i]);
  for (const auto& c : constraints_) {
    std::int64_t sum = 0;
    for (const auto& t : c.terms) sum += t.coeff * values[t.var];
    bool ok = true;
    switch (c.kind) {
      case Kind::Eq: ok = sum == c.rhs; break;
      case Kind::Le: ok = sum <= c.rhs; break;
      case Kind::Even: ok = (sum - c.rhs) % 2 == 0; break;
    }
    if (!ok) out.push_back(c.label);
  }
  return out;
}

}  // namespace qdp::dimfun

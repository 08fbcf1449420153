// Batch frontend: one subcommand per driver, JSON or text reports.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdp/dimfun.hpp"
#include "qdp/fixloc.hpp"
#include "qdp/graded.hpp"
#include "qdp/json_io.hpp"
#include "qdp/repchar.hpp"
#include "qdp/report.hpp"
#include "qdp/theorem_b.hpp"
#include "qdp/theorem_c.hpp"

namespace {

using qdp::io::json;
using qdp::io::ReportStatus;
using qdp::io::VerificationReport;

struct Globals {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  bool timing = false;
};

// flag > QDP_BUDGET > default
std::uint64_t resolve_budget(const Globals& g, std::uint64_t fallback) {
  if (g.budget) return *g.budget;
  if (const char* env = std::getenv("QDP_BUDGET")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12)
      throw qdp::Error(qdp::ErrorKind::MalformedInput, "QDP_BUDGET must be a positive integer, got '" + s + "'");
    const auto v = std::stoull(s);
    if (v == 0) throw qdp::Error(qdp::ErrorKind::MalformedInput, "QDP_BUDGET must be positive");
    return v;
  }
  return fallback;
}

std::uint32_t narrow_budget(std::uint64_t b) {
  if (b > 100000) throw qdp::Error(qdp::ErrorKind::DomainMismatch, "budget " + std::to_string(b) + " is unreasonably large");
  return static_cast<std::uint32_t>(b);
}

VerificationReport theorem_b(std::uint32_t p, const Globals& g) {
  const auto guard = resolve_budget(g, qdp::group::kDefaultSizeGuard);
  const auto cert = qdp::dimfun::qdp_obstruction_theorem_B(p, guard);
  VerificationReport r;
  r.statement = {"spherical fibration obstruction for Qd(p)",
                 "for odd p, no mod-p spherical fibration over BQd(p) has a p-effective Euler class"};
  r.status = qdp::io::from_legs(cert.status(), true);
  if (!cert.unsat && r.status != ReportStatus::Refuted) r.status = ReportStatus::Refuted;
  r.witness = qdp::io::theorem_b_to_json(cert);
  return r;
}

VerificationReport theorem_c(std::uint32_t p, const std::vector<std::uint32_t>& k_list, const Globals& g) {
  const auto budget = narrow_budget(resolve_budget(g, qdp::steenrod::kDefaultDegreeBudget));
  const auto cert = qdp::steenrod::theorem_C_driver(p, k_list, budget);
  VerificationReport r;
  r.statement = {"free action obstruction for Qd(p)",
                 "Qd(p) has no finite free action on a finite complex homotopy equivalent to S^n x S^n"};
  r.status = qdp::io::from_legs(cert.status(), false);
  r.witness = qdp::io::theorem_c_to_json(cert);
  return r;
}

VerificationReport borel_smith(const std::string& group_path, const std::string& tau_path, const Globals& g) {
  const auto guard = resolve_budget(g, qdp::group::kDefaultSizeGuard);
  json tj = qdp::io::read_json_file(tau_path);
  if (!group_path.empty()) tj["group"] = qdp::io::read_json_file(group_path);
  const auto tau = qdp::io::tau_from_json(tj, guard);
  const auto rep = qdp::dimfun::check_borel_smith(tau);
  VerificationReport r;
  r.statement = {"Borel-Smith conditions", "tau satisfies conditions (i)-(iii) on every tagged normal pair of p-subgroups"};
  r.status = rep.passes() ? ReportStatus::Verified : ReportStatus::Refuted;
  r.witness = qdp::io::borel_smith_to_json(rep);
  r.witness["tau"] = qdp::io::tau_to_json(tau, nullptr);
  return r;
}

VerificationReport realize(const std::string& group_path, const std::string& tau_path, const Globals& g) {
  const auto guard = resolve_budget(g, qdp::group::kDefaultSizeGuard);
  json tj = qdp::io::read_json_file(tau_path);
  if (!group_path.empty()) tj["group"] = qdp::io::read_json_file(group_path);
  const auto tau = qdp::io::tau_from_json(tj, guard);
  const auto basis = qdp::repchar::real_representation_basis(tau.lattice()->group());
  const auto found = qdp::dimfun::realize_as_representation(tau, basis);
  VerificationReport r;
  r.statement = {"realization by representations",
                 "a monotone Borel-Smith function on a p-group is the dimension function of a real representation"};
  if (!found) {
    r.status = ReportStatus::Refuted;
    r.witness = {{"realized", false}};
    return r;
  }
  json entries = json::array();
  for (std::size_t i = 0; i < basis.entries.size(); ++i) {
    if (found->coefficients[i] == 0) continue;
    const auto& e = basis.entries[i];
    json values = json::array();
    for (const auto& v : e.character.class_values()) values.push_back(v.to_string());
    entries.push_back({{"basis_index", i},
                       {"multiplicity", found->coefficients[i]},
                       {"real_degree", e.real_degree()},
                       {"type", qdp::repchar::to_string(e.type)},
                       {"character", values}});
  }
  const auto back = qdp::dimfun::combine(tau.lattice(), basis, found->coefficients);
  const bool round_trip = back.values() == tau.values();
  r.status = round_trip ? ReportStatus::Verified : ReportStatus::Refuted;
  r.witness = {{"realized", true}, {"round_trip", round_trip}, {"search_nodes", found->nodes}, {"summands", entries}};
  return r;
}

VerificationReport fix_rank(const std::string& model_path, const Globals& g) {
  const auto model = qdp::io::model_from_json(qdp::io::read_json_file(model_path));
  VerificationReport r;
  r.statement = {"rank of the Fix functor",
                 "for a fibration over BZ/p with fiber cohomology H(S^n), Fix(HE) is H(S^r) with -1 <= r <= n"};
  const auto pole = resolve_budget(g, qdp::fixloc::default_pole_bound(model.fiber_degree()));
  qdp::fixloc::FixResult res;
  try {
    res = qdp::fixloc::fix_rank(model, pole);
  } catch (const qdp::Error& e) {
    if (e.kind() != qdp::ErrorKind::NoWitnessFound) throw;
    r.status = ReportStatus::BudgetLimited;
    r.witness = {{"model", qdp::io::model_to_json(model)}, {"message", e.what()}};
    return r;
  }
  const bool rechecked = !res.witness || qdp::fixloc::verify_witness(model, *res.witness, res.checked_ops);
  r.status = rechecked && res.unique ? ReportStatus::Verified : ReportStatus::Refuted;
  r.witness = qdp::io::fix_result_to_json(res);
  r.witness["rechecked"] = rechecked;
  r.witness["model"] = qdp::io::model_to_json(model);
  r.witness["he_presentation"] = qdp::fixloc::he_presentation(model, model.fiber_degree() + 2).description;
  return r;
}

VerificationReport steenrod_check(std::uint32_t p) {
  using namespace qdp::steenrod;
  if (p == 2) throw qdp::Error(qdp::ErrorKind::EvenPrime, "rank-two operations are implemented for odd p only");
  const auto inv = invariants(p);
  json checks = json::object();
  bool all = true;
  auto record = [&](const char* name, bool ok, std::size_t cases) {
    checks[name] = {{"holds", ok}, {"cases", cases}};
    all = all && ok;
  };
  record("P1(zeta) = 0", steenrod_power(1, inv.zeta).is_zero(), 1);
  record("P1(xi) = zeta^(p-1)", steenrod_power(1, inv.xi) == inv.zeta.pow(p - 1), 1);

  const auto uv = GradedElement::u(p) * GradedElement::v(p);
  const auto e = GradedElement::x(p) * GradedElement::v(p) - GradedElement::u(p) * GradedElement::y(p);
  bool ok = true;
  std::size_t cases = 0;
  for (std::uint32_t d = 0; d <= 8; d += 2)
    for (const auto& m : monomials_of_degree(p, 2, d)) {
      if (m.e || m.d) continue;
      const auto gm = GradedElement::monomial(p, m);
      ok = ok && bockstein(uv * gm) == e * gm;
      ++cases;
    }
  record("beta(uv g) = (xv - uy) g", ok, cases);

  ok = true;
  cases = 0;
  for (std::uint32_t d = 0; d <= 8; ++d)
    for (const auto& m : monomials_of_degree(p, 2, d)) {
      const auto a = GradedElement::monomial(p, m);
      ok = ok && bockstein(bockstein(a)).is_zero();
      for (std::uint32_t i = 1; 2 * i <= d + 2; ++i) {
        const auto pa = steenrod_power(i, a);
        if (2 * i > d) ok = ok && pa.is_zero();
        if (2 * i == d) ok = ok && pa == a.pow(p);
      }
      ++cases;
    }
  record("beta^2 = 0 and instability", ok, cases);

  VerificationReport r;
  r.statement = {"Steenrod identities on H(V)",
                 "P^1 kills zeta, sends xi to zeta^(p-1), and beta(uv g) = (xv - uy) g for polynomial g"};
  r.status = all ? ReportStatus::Verified : ReportStatus::Refuted;
  r.witness = {{"p", p}, {"checks", checks}, {"xi", inv.xi.to_string()}, {"zeta", inv.zeta.to_string()}};
  return r;
}

VerificationReport prop_zeta(std::uint32_t p, std::uint32_t k, const Globals& g) {
  const auto budget = narrow_budget(resolve_budget(g, qdp::steenrod::kDefaultDegreeBudget));
  VerificationReport r;
  r.statement = {"Steenrod-closed invariant ideals",
                 "a nonzero M in the degree-2k invariants generating a Steenrod-closed ideal forces (p+1) | k and "
                 "M = F_p zeta^(k/(p+1))"};
  const auto rep = qdp::steenrod::brute_force_zeta_proposition(p, k, budget);
  r.status = rep.budget_limited ? ReportStatus::BudgetLimited
                                : (rep.matches_prediction ? ReportStatus::Verified : ReportStatus::Refuted);
  r.witness = qdp::io::zeta_report_to_json(rep);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdp: exact verification drivers for Qd(p)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", g.budget, "degree, pole or group-size budget (overrides QDP_BUDGET)")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "add wall-clock time to the report");
  app.fallthrough();

  std::uint32_t p = 0, k = 0;
  std::vector<std::uint32_t> k_list;
  std::string group_path, tau_path, model_path;
  std::function<VerificationReport()> run;
  std::string command;

  auto* tb = app.add_subcommand("theorem-b", "spherical fibration obstruction certificate");
  tb->add_option("--p", p, "prime")->required();
  tb->callback([&] { run = [&] { return theorem_b(p, g); }; });

  auto* tc = app.add_subcommand("theorem-c", "free action obstruction certificate");
  tc->add_option("--p", p, "prime")->required();
  tc->add_option("--k-list", k_list, "degrees k for the zeta-power legs")->delimiter(',');
  tc->callback([&] { run = [&] { return theorem_c(p, k_list, g); }; });

  auto* bs = app.add_subcommand("borel-smith", "check the Borel-Smith conditions for tau");
  bs->add_option("--group", group_path, "group JSON (overrides the group inside tau)");
  bs->add_option("--tau", tau_path, "tau JSON")->required();
  bs->callback([&] { run = [&] { return borel_smith(group_path, tau_path, g); }; });

  auto* re = app.add_subcommand("realize", "write tau as the dimension function of a real representation");
  re->add_option("--group", group_path, "group JSON (overrides the group inside tau)");
  re->add_option("--tau", tau_path, "tau JSON")->required();
  re->callback([&] { run = [&] { return realize(group_path, tau_path, g); }; });

  auto* fr = app.add_subcommand("fix-rank", "rank of Fix for a two-row model");
  fr->add_option("--model", model_path, "model JSON")->required();
  fr->callback([&] { run = [&] { return fix_rank(model_path, g); }; });

  auto* sc = app.add_subcommand("steenrod-check", "symbolic Steenrod identities on H((Z/p)^2)");
  sc->add_option("--p", p, "prime")->required();
  sc->callback([&] { run = [&] { return steenrod_check(p); }; });

  auto* pz = app.add_subcommand("prop-zeta", "enumerate Steenrod-closed invariant ideals in degree 2k");
  pz->add_option("--p", p, "prime")->required();
  pz->add_option("--k", k, "half degree")->required();
  pz->callback([&] { run = [&] { return prop_zeta(p, k, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  try {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report = run();
    const auto t1 = std::chrono::steady_clock::now();
    report.command = echo.str();
    if (g.timing) report.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (g.format == "json")
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << report.to_text();
    return qdp::io::exit_code(report.status);
  } catch (const qdp::Error& e) {
    const json err = qdp::io::error_json(echo.str(), e.kind(), e.what());
    if (g.format == "json")
      std::cout << err.dump(2) << "\n";
    else
      std::cout << "command: " << echo.str() << "\nstatus:  error\nerror:   " << e.what() << "\n";
    std::cerr << "qdp " << command << ": " << e.what() << "\n";
    return qdp::io::exit_code(e.kind());
  }
}

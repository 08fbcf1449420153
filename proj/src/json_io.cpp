#include "qdp/json_io.hpp"

#include <fstream>
#include <set>

#include "qdp/error.hpp"

namespace qdp::io {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::MalformedInput, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    malformed(std::string("field '") + what + "' has the wrong type");
  }
}

std::uint32_t get_u32(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) malformed(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

json members_json(const std::vector<group::Element>& m) { return json(m); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

group::GroupPtr group_from_json(const json& j, std::size_t size_guard) {
  const std::string kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "qdp") return group::construct_qdp(get_u32(j, "p"), size_guard);
  if (kind != "table") malformed("unknown group kind '" + kind + "'");
  const std::uint32_t n = get_u32(j, "n");
  const json& mul = field(j, "mul");
  if (!mul.is_array() || mul.size() != n) malformed("'mul' must have n rows");
  std::vector<group::Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != n) malformed("'mul' rows must have n entries");
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() >= n) malformed("table entry out of range");
      table.push_back(x.get<group::Element>());
    }
  }
  std::string name = j.contains("name") ? get_as<std::string>(j.at("name"), "name") : "table";
  return group::FiniteGroup::from_table(n, std::move(table), std::move(name));
}

json group_to_json(const group::FiniteGroup& g) {
  if (g.qd_origin()) return {{"kind", "qdp"}, {"p", g.qd_origin()->p}};
  const auto flat = g.table();
  const std::size_t n = g.order();
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i)
    mul.push_back(std::vector<group::Element>(flat.begin() + i * n, flat.begin() + (i + 1) * n));
  return {{"kind", "table"}, {"name", g.name()}, {"n", n}, {"mul", mul}};
}

dimfun::SuperClassFunction tau_from_json(const json& j, std::size_t size_guard) {
  const auto g = group_from_json(field(j, "group"), size_guard);
  const std::uint32_t p = get_u32(j, "p");
  const std::int64_t scale = j.contains("scale") ? get_as<std::int64_t>(j.at("scale"), "scale") : 1;
  if (scale <= 0) malformed("'scale' must be positive");
  const auto lattice = dimfun::make_lattice(g, p, size_guard);
  const json& vals = field(j, "values");
  if (!vals.is_array()) malformed("'values' must be an array");
  std::vector<std::optional<std::int64_t>> by_class(lattice->class_count());
  for (const auto& entry : vals) {
    auto members = get_as<std::vector<group::Element>>(field(entry, "class_rep"), "class_rep");
    for (auto m : members)
      if (m >= g->order()) malformed("class_rep member out of range");
    const group::Subgroup h(g, std::move(members));
    if (!h.is_closed()) malformed("class_rep is not a subgroup");
    const std::size_t c = lattice->class_of(h);
    if (by_class[c]) malformed("class of order " + std::to_string(h.order()) + " listed twice");
    by_class[c] = get_as<std::int64_t>(field(entry, "value"), "value");
  }
  std::vector<std::int64_t> values;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (!by_class[c]) malformed("no value for the class of order " + std::to_string(lattice->representative(c).order()));
    values.push_back(*by_class[c]);
  }
  return dimfun::SuperClassFunction(lattice, std::move(values), scale);
}

json tau_to_json(const dimfun::SuperClassFunction& tau, const json& group_json) {
  json vals = json::array();
  for (std::size_t c = 0; c < tau.values().size(); ++c)
    vals.push_back({{"class_rep", members_json(tau.lattice()->representative(c).members())}, {"value", tau.value(c)}});
  json out = {{"schema", kSchema}, {"p", tau.prime()}, {"scale", tau.scale()}, {"values", vals}};
  if (!group_json.is_null()) out["group"] = group_json;
  return out;
}

fixloc::LocalElement local_element_from_json(std::uint32_t p, const json& terms) {
  if (!terms.is_array()) malformed("term list must be an array");
  fixloc::LocalElement out(p);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) malformed("terms are [monomial, generator, coefficient]");
    const std::string gen = get_as<std::string>(t[1], "generator");
    if (gen != "g0" && gen != "g_n") malformed("generator must be g0 or g_n");
    const auto cell = fixloc::parse_monomial(get_as<std::string>(t[0], "monomial"), gen == "g0" ? fixloc::Gen::Unit : fixloc::Gen::Fiber);
    out.add(cell, get_as<std::int64_t>(t[2], "coefficient"));
  }
  return out;
}

json local_element_to_json(const fixloc::LocalElement& e) {
  json out = json::array();
  for (const auto& [c, v] : e.terms()) out.push_back({fixloc::monomial_string(c), fixloc::to_string(c.gen), v});
  return out;
}

fixloc::TwoRowModule model_from_json(const json& j) {
  const std::uint32_t p = get_u32(j, "p");
  const std::uint32_t n = get_u32(j, "n");
  std::optional<fixloc::Differential> d;
  const json& dj = field(j, "differential");
  if (dj.is_string()) {
    if (dj.get<std::string>() != "zero") malformed("differential must be \"zero\" or {lambda, a}");
  } else {
    d = fixloc::Differential{get_u32(dj, "lambda"), get_u32(dj, "a")};
  }
  fixloc::SteenrodData data;
  if (j.contains("steenrod")) {
    for (const auto& op : j.at("steenrod")) {
      const std::string name = get_as<std::string>(field(op, "op"), "op");
      std::uint32_t key = 0;
      if (name == "beta") {
        key = 0;
      } else if ((name.rfind("P", 0) == 0 && name.size() > 1) || (name.rfind("Sq", 0) == 0 && name.size() > 2)) {
        const std::string digits = name.substr(name[0] == 'P' ? 1 : 2);
        if (digits.find_first_not_of("0123456789") != std::string::npos) malformed("bad operation '" + name + "'");
        key = static_cast<std::uint32_t>(std::stoul(digits));
        if (key == 0) malformed("operation index starts at 1");
      } else {
        malformed("bad operation '" + name + "'");
      }
      if (data.count(key)) malformed("operation '" + name + "' given twice");
      data.emplace(key, local_element_from_json(p, field(op, "g_n")));
    }
  }
  try {
    return fixloc::TwoRowModule(p, n, d, std::move(data));
  } catch (const Error& e) {
    // s on F_2[t] is a shape error of the input
    if (e.kind() == ErrorKind::EvenPrime) malformed(e.what());
    throw;
  }
}

json model_to_json(const fixloc::TwoRowModule& m) {
  json out = {{"schema", kSchema}, {"p", m.prime()}, {"n", m.fiber_degree()}};
  if (m.differential())
    out["differential"] = {{"lambda", m.differential()->lambda}, {"a", m.differential()->a}};
  else
    out["differential"] = "zero";
  json ops = json::array();
  for (const auto& [op, v] : m.steenrod_data()) {
    const std::string name = op == 0 ? "beta" : (m.prime() == 2 ? "Sq" : "P") + std::to_string(op);
    ops.push_back({{"op", name}, {"g_n", local_element_to_json(v)}});
  }
  out["steenrod"] = ops;
  return out;
}

json fix_result_to_json(const fixloc::FixResult& r) {
  json out = {{"rank", r.rank}, {"pole_bound", r.pole_bound}, {"checked_ops", r.checked_ops}, {"unique", r.unique}};
  out["witness"] = r.witness ? local_element_to_json(*r.witness) : json(nullptr);
  return out;
}

json graded_to_json(const steenrod::GradedElement& e) { return e.term_strings(); }

json character_table_to_json(const std::vector<repchar::Character>& chars) {
  if (chars.empty()) throw Error(ErrorKind::DomainMismatch, "empty character table");
  const auto& cls = chars.front().classes();
  json classes = json::array();
  for (const auto& c : cls.classes) classes.push_back({{"representative", c.front()}, {"size", c.size()}});
  json rows = json::array();
  for (const auto& chi : chars) {
    json row = json::array();
    for (const auto& v : chi.class_values()) row.push_back(v.coefficients());
    rows.push_back(row);
  }
  return {{"schema", kSchema}, {"cyclotomic_order", chars.front().cyclotomic_order()}, {"classes", classes}, {"characters", rows}};
}

json legs_to_json(const std::vector<Leg>& legs) {
  json out = json::array();
  for (const auto& l : legs) out.push_back({{"name", l.name}, {"status", to_string(l.status)}, {"detail", l.detail}});
  return out;
}

json theorem_b_to_json(const dimfun::TheoremBCertificate& c) {
  json control_solution = json::object();
  for (std::size_t i = 0; i < c.control_classes.size() && i < c.control_solution.size(); ++i)
    control_solution[c.control_classes[i]] = c.control_solution[i];
  return {
      {"p", c.p},
      {"group_order", c.group_order},
      {"sylow_order", c.sylow_order},
      {"center", members_json(c.center)},
      {"noncentral", members_json(c.noncentral)},
      {"witness", {{"element", c.witness}, {"label", c.witness_label}, {"count", c.witness_count}}},
      {"system", {{"variables", c.variables}, {"constraints", c.constraints}, {"unsat", c.unsat},
                  {"refuted_by_propagation", c.refuted_by_propagation}, {"conflict", c.conflict},
                  {"search_nodes", c.search_nodes}}},
      {"fusion_forces_equality", c.fusion_forces_equality},
      {"methods_agree", c.methods_agree},
      {"control", {{"sat", c.control_sat}, {"solution", control_solution}, {"realized", c.control_realized}}},
      {"legs", legs_to_json(c.legs)},
      {"status", to_string(c.status())},
  };
}

json zeta_report_to_json(const steenrod::ZetaPropositionReport& r) {
  json piece = json::array();
  for (const auto& [a, b] : r.piece) piece.push_back({{"xi", a}, {"zeta", b}});
  json out = {{"p", r.p},
              {"k", r.k},
              {"piece", piece},
              {"all_subspaces", r.all_subspaces},
              {"subspaces_tested", r.subspaces_tested},
              {"survivors", r.survivor_labels},
              {"matches_prediction", r.matches_prediction},
              {"budget_limited", r.budget_limited}};
  out["predicted_zeta_power"] = r.predicted_zeta_power ? json(*r.predicted_zeta_power) : json(nullptr);
  return out;
}

json theorem_c_to_json(const steenrod::TheoremCCertificate& c) {
  json props = json::array();
  for (const auto& r : c.propositions) props.push_back(zeta_report_to_json(r));
  json one = json::array();
  for (const auto& [s, f] : c.one_generator) one.push_back({{"zeta_power", s}, {"quotient", to_string(f)}});
  return {{"p", c.p},
          {"k_list", c.k_list},
          {"generators_of_order_p", c.generators_of_order_p},
          {"lefschetz",
           {{"nontrivial_odd", c.lefschetz.nontrivial_odd},
            {"nontrivial_even", c.lefschetz.nontrivial_even},
            {"trivial_odd", c.lefschetz.trivial_odd},
            {"trivial_even", c.lefschetz.trivial_even}}},
          {"propositions", props},
          {"one_generator", one},
          {"legs", legs_to_json(c.legs)},
          {"status", to_string(c.status())}};
}

json borel_smith_to_json(const dimfun::BorelSmithReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"condition", x.condition}, {"subgroups", x.subgroups}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return {{"monotone", r.monotone}, {"pairs_checked", r.pairs_checked}, {"violations", v}, {"passes", r.passes()}};
}

}  // namespace qdp::io

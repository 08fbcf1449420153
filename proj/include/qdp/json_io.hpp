#pragma once

#include <string>

#include <json.hpp>

#include "qdp/dimfun.hpp"
#include "qdp/fixloc.hpp"
#include "qdp/graded.hpp"
#include "qdp/repchar.hpp"
#include "qdp/theorem_b.hpp"
#include "qdp/theorem_c.hpp"

/// JSON reading and writing. Every document written here carries
/// "schema":"1"; readers throw MalformedInput on shape errors.
namespace qdp::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "1";

json read_json_file(const std::string& path);

/// {"kind":"qdp","p":3} or {"kind":"table","n":N,"mul":[[...]]}
group::GroupPtr group_from_json(const json& j, std::size_t size_guard = group::kDefaultSizeGuard);
json group_to_json(const group::FiniteGroup& g);

/// {"group":..., "p":..., "scale":m, "values":[{"class_rep":[...],"value":v}]}
/// Every conjugacy class of p-subgroups must be listed exactly once.
dimfun::SuperClassFunction tau_from_json(const json& j, std::size_t size_guard = group::kDefaultSizeGuard);
/// Same format; pass the group JSON to embed, or null.
json tau_to_json(const dimfun::SuperClassFunction& tau, const json& group_json);

fixloc::TwoRowModule model_from_json(const json& j);
json model_to_json(const fixloc::TwoRowModule& m);
json local_element_to_json(const fixloc::LocalElement& e);
fixloc::LocalElement local_element_from_json(std::uint32_t p, const json& terms);
json fix_result_to_json(const fixloc::FixResult& r);

json graded_to_json(const steenrod::GradedElement& e);

/// {"cyclotomic_order": e, "classes":[{"representative":g,"size":n}],
///  "characters":[[[c_0..c_{phi(e)-1}] per class], ...]}
json character_table_to_json(const std::vector<repchar::Character>& chars);

json theorem_b_to_json(const dimfun::TheoremBCertificate& c);
json theorem_c_to_json(const steenrod::TheoremCCertificate& c);
json zeta_report_to_json(const steenrod::ZetaPropositionReport& r);
json borel_smith_to_json(const dimfun::BorelSmithReport& r);
json legs_to_json(const std::vector<Leg>& legs);

}  // namespace qdp::io

#include <doctest.h>

#include <cstdlib>
#include <functional>

#include "qdp/error.hpp"
#include "qdp/json_io.hpp"
#include "qdp/report.hpp"

using namespace qdp;
using namespace qdp::io;

namespace {

std::string data(const std::string& rel) {
  const char* dir = std::getenv("QDP_DATA_DIR");
  return std::string(dir ? dir : "data") + "/" + rel;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::SizeGuard;
}

}  // namespace

TEST_CASE("corpus groups load with the right orders") {
  const std::vector<std::pair<std::string, std::size_t>> want{
      {"c3xc3", 9}, {"c9", 9}, {"d8", 8}, {"heis3", 27}, {"q8", 8}, {"qd3", 216}};
  for (const auto& [name, order] : want) {
    const auto g = group_from_json(read_json_file(data("groups/" + name + ".json")));
    CHECK(g->order() == order);
    CHECK(g->verify_associativity());
  }
}

TEST_CASE("group JSON round-trip") {
  for (const auto& g : {group::heisenberg(3), group::generalized_quaternion(8), group::construct_qdp(3)}) {
    const auto back = group_from_json(group_to_json(*g));
    CHECK(back->order() == g->order());
    CHECK(back->table() == g->table());
  }
}

TEST_CASE("tau JSON round-trip") {
  for (const char* name : {"regular_c3xc3", "regular_heis3", "regular_q8", "rep_heis3"}) {
    const auto j = read_json_file(data(std::string("tau/") + name + ".json"));
    const auto tau = tau_from_json(j);
    const auto again = tau_from_json(tau_to_json(tau, j["group"]));
    CHECK(again.values() == tau.values());
    CHECK(again.scale() == tau.scale());
  }
}

TEST_CASE("malformed inputs") {
  CHECK(kind_of([] { read_json_file(data("models/truncated.json")); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { read_json_file(data("no/such/file.json")); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { tau_from_json(read_json_file(data("tau/missing_class_c3xc3.json"))); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { model_from_json(read_json_file(data("models/malformed_differential.json"))); }) ==
        ErrorKind::MalformedInput);
  CHECK(kind_of([] { model_from_json(read_json_file(data("models/beta_squared_p3.json"))); }) == ErrorKind::InvalidModel);
  CHECK(kind_of([] { group_from_json(json{{"kind", "table"}, {"n", 2}, {"mul", {{0, 1}, {1, 5}}}}); }) ==
        ErrorKind::MalformedInput);
  CHECK(kind_of([] { group_from_json(json{{"kind", "free"}}); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { group_from_json(json{{"kind", "qdp"}, {"p", 4}}); }) == ErrorKind::CompositeP);
  // a two-element set that is not a subgroup of Z/3 x Z/3
  auto j = read_json_file(data("tau/regular_c3xc3.json"));
  j["values"][1]["class_rep"] = {0, 1};
  CHECK(kind_of([&] { tau_from_json(j); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { model_from_json(json{{"p", 3}, {"n", 2}, {"differential", "zero"}, {"steenrod", {{{"op", "Q1"}, {"g_n", json::array()}}}}}); }) ==
        ErrorKind::MalformedInput);
}

TEST_CASE("fix result JSON carries the witness") {
  const auto m = model_from_json(read_json_file(data("models/sphere_R_plus_L_p3.json")));
  const auto j = fix_result_to_json(fixloc::fix_rank(m));
  CHECK(j["rank"] == 0);
  CHECK(local_element_from_json(3, j["witness"]) == *fixloc::fix_rank(m).witness);
}

TEST_CASE("exit codes are a function of status") {
  CHECK(exit_code(ReportStatus::Verified) == 0);
  CHECK(exit_code(ReportStatus::UnsatCertificate) == 0);
  CHECK(exit_code(ReportStatus::BudgetLimited) == 3);
  CHECK(exit_code(ReportStatus::Refuted) == 4);
  CHECK(exit_code(ErrorKind::MalformedInput) == 1);
  CHECK(exit_code(ErrorKind::DegreeBudget) == 3);
  CHECK(exit_code(ErrorKind::SizeGuard) == 3);
  CHECK(exit_code(ErrorKind::EvenPrime) == 2);
  CHECK(exit_code(ErrorKind::NotBorelSmith) == 2);
}

TEST_CASE("leg statuses map to report statuses") {
  CHECK(from_legs(LegStatus::Verified, true) == ReportStatus::UnsatCertificate);
  CHECK(from_legs(LegStatus::Verified, false) == ReportStatus::Verified);
  CHECK(from_legs(LegStatus::BudgetLimited, false) == ReportStatus::BudgetLimited);
  CHECK(from_legs(LegStatus::Refuted, true) == ReportStatus::Refuted);
  // a budget-limited leg never lets the combined status read verified
  const std::vector<Leg> legs{{"a", LegStatus::Verified, ""}, {"b", LegStatus::BudgetLimited, ""}, {"c", LegStatus::Assumed, ""}};
  CHECK(combined_status(legs) == LegStatus::BudgetLimited);
}

TEST_CASE("report rendering") {
  VerificationReport r{"qdp fix-rank --model m.json", {"fix rank", "some claim"}, ReportStatus::Verified, json{{"rank", 0}}, std::nullopt};
  const auto j = r.to_json();
  CHECK(j["schema"] == "1");
  CHECK(j["status"] == "verified");
  CHECK(j["statement"]["name"] == "fix rank");
  CHECK_FALSE(j.contains("timing_ms"));
  r.timing_ms = 1.5;
  CHECK(r.to_json()["timing_ms"] == 1.5);
  const auto text = r.to_text();
  CHECK(text.find("status:    verified") != std::string::npos);
  CHECK(text.find("rank: 0") != std::string::npos);
  const auto e = error_json("qdp x", ErrorKind::EvenPrime, "p = 2");
  CHECK(e["status"] == "error");
  CHECK(e["error"]["kind"] == to_string(ErrorKind::EvenPrime));
}

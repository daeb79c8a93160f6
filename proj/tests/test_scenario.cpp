#include <doctest.h>

#include "fmb/scenario.hpp"

using namespace fmb;

namespace {

// collects check statuses by name
const Json& find_check(const Json& report, const std::string& name) {
  for (const Json& c : report.at("checks"))
    if (c.at("name") == Json(name)) return c;
  FAIL("check not found: ", name);
  static Json missing;
  return missing;
}

bool all_pass(const Json& report) {
  for (const Json& c : report.at("checks"))
    if (c.at("status") == Json("fail")) return false;
  return true;
}

}  // namespace

TEST_CASE("scenario catalog and argument validation") {
  CHECK(scenario_names().size() == 7);
  CHECK_THROWS_AS(run_scenario("unknown", ScenarioArgs{}), std::invalid_argument);
  ScenarioArgs bad;
  bad.random = -1;
  CHECK_THROWS_AS(run_scenario("thm1-roundtrip", bad), std::invalid_argument);
  ScenarioArgs badfam;
  badfam.n = 1;
  badfam.p = 3;  // the chain blocks exist only in characteristic two
  CHECK_THROWS_AS(run_scenario("lemma2", badfam), std::invalid_argument);
}

TEST_CASE("word-basis scenario produces the eight-member certificate") {
  ScenarioArgs a;  // defaults: m = 0, n = 1, s = 1, p = 2
  ScenarioResult r = run_scenario("lemma2", a);
  CHECK(r.exit_code == 0);
  CHECK(all_pass(r.report));
  CHECK(r.report.at("scenario") == Json("lemma2"));
  CHECK(r.report.at("inputs_digest").get<std::string>().size() == 16);
  const Json& cert = r.report.at("artifacts").at("certificate");
  CHECK(cert.at("members").size() == 8);
  CHECK(cert.at("layer_counts") == Json::array({1, 2, 2, 2, 1}));
  // the eight word names, in deterministic order
  const Json& names = r.report.at("artifacts").at("member_names");
  REQUIRE(names.size() == 8);
  CHECK(names[0] == Json("1"));

  // the three tensor-family instances verify with the right dimensions
  const std::vector<std::tuple<int, int, int, int>> fams = {
      {1, 0, 2, 4}, {1, 1, 1, 16}, {0, 1, 2, 64}};
  for (const auto& [m, n, s, dim] : fams) {
    ScenarioArgs f;
    f.m = m;
    f.n = n;
    f.s = s;
    ScenarioResult rf = run_scenario("lemma2", f);
    CHECK(rf.exit_code == 0);
    CHECK(static_cast<int>(rf.report.at("artifacts").at("certificate").at("members").size()) ==
          dim);
  }
}

TEST_CASE("round-trip scenario passes its fixed and randomized instances") {
  ScenarioArgs a;
  a.random = 25;  // the full run uses 100; trimmed here to keep the suite fast
  ScenarioResult r = run_scenario("thm1-roundtrip", a);
  CHECK(r.exit_code == 0);
  CHECK(find_check(r.report, "seven-dim-rays").at("status") == Json("pass"));
  CHECK(find_check(r.report, "seven-dim-quotient").at("status") == Json("pass"));
  CHECK(find_check(r.report, "seven-dim-kernel").at("status") == Json("pass"));
  const Json& rand = find_check(r.report, "randomized-roundtrips");
  CHECK(rand.at("status") == Json("pass"));
  CHECK(rand.at("detail").get<std::string>().find("25/25") == 0);
  CHECK(r.report.at("artifacts").at("instances").size() == 25);
  const Json& rays = r.report.at("artifacts").at("rays");
  CHECK(rays.at("i0") == Json::array({3}));
  CHECK(rays.at("i1") == Json::array({4}));
  CHECK(rays.at("partner") == Json::array({5}));
}

TEST_CASE("transport scenario re-verifies every certificate on the graded side") {
  ScenarioResult r = run_scenario("thm3-transport", ScenarioArgs{});
  CHECK(r.exit_code == 0);
  CHECK(all_pass(r.report));
  const Json& transported = r.report.at("artifacts").at("transported");
  for (const char* name : {"power-basis-f2", "deformed-power-basis", "power-basis-f3",
                           "family-1-0-2", "family-0-1-1", "family-1-1-1", "group-algebra-d8"}) {
    REQUIRE(transported.contains(name));
    CHECK_FALSE(transported.at(name).at("certificate").is_null());
  }
}

TEST_CASE("probe scenario reports span two with an evidence-only search") {
  ScenarioArgs a;
  a.samples = 2000;  // the full run samples a million candidates
  ScenarioResult r = run_scenario("thm2-probe", a);
  CHECK(r.exit_code == 0);
  CHECK(find_check(r.report, "six-monomial-span").at("status") == Json("pass"));
  CHECK(find_check(r.report, "facts-consistent").at("status") == Json("pass"));
  const Json& ev = find_check(r.report, "randomized-search");
  CHECK(ev.at("status") == Json("evidence-only"));
  CHECK(ev.at("detail").get<std::string>().find("not a nonexistence proof") != std::string::npos);
  CHECK(r.report.at("artifacts").at("probe").at("span_dim") == Json(2));
  CHECK(r.report.at("artifacts").at("search").at("status") == Json("budget-exceeded"));
}

TEST_CASE("layer-algebra comparison scenario covers the six bundled instances") {
  ScenarioResult r = run_scenario("quillen", ScenarioArgs{});
  CHECK(r.exit_code == 0);
  const Json& reports = r.report.at("artifacts").at("reports");
  for (const char* name : {"c2", "c4", "d8", "q8", "m16", "e27x3"}) {
    REQUIRE(reports.contains(name));
    CHECK(reports.at(name).at("ok") == Json(true));
    CHECK(reports.at(name).at("graded_dims_group") == reports.at(name).at("graded_dims_env"));
  }
}

TEST_CASE("group-verdict scenario distinguishes stated and computed outcomes") {
  ScenarioResult r = run_scenario("corollary2", ScenarioArgs{});
  CHECK(r.exit_code == 0);
  CHECK(all_pass(r.report));
  const Json& verdicts = r.report.at("artifacts").at("verdicts");
  CHECK(verdicts.at("e27x3").at("no_fmb") == Json(true));
  CHECK(verdicts.at("e27x3").at("branch") == Json("lie-class-2"));
  CHECK(verdicts.at("e27x9").at("branch") == Json("powerful"));
  CHECK(verdicts.at("d8").at("powerful") == Json(false));
  CHECK(verdicts.at("q8").at("powerful") == Json(false));
  CHECK(verdicts.at("q8").at("search").at("status") == Json("exhausted"));
  CHECK(verdicts.at("c4").at("search").at("status") == Json("found"));
}

TEST_CASE("rational-function scenario flags the indecomposable graded algebra") {
  ScenarioResult r = run_scenario("lalpha", ScenarioArgs{});
  CHECK(r.exit_code == 0);
  CHECK(find_check(r.report, "parameter-has-no-pth-root").at("status") == Json("pass"));
  CHECK(find_check(r.report, "graded-envelope-isomorphism").at("status") == Json("pass"));
  CHECK(find_check(r.report, "cyclic-decomposition-decided").at("status") == Json("pass"));
  const Json& art = r.report.at("artifacts");
  CHECK(art.at("three_cyclic_direct_sum") == Json(false));
  CHECK(art.at("decomposition").at("decomposable") == Json(false));
  CHECK(art.at("note").get<std::string>().find("NOT a direct sum of three cyclic") !=
        std::string::npos);
  CHECK(art.at("graded_envelope").at("ok") == Json(true));
}

TEST_CASE("scenario reports are byte-identical across runs") {
  ScenarioArgs a;
  a.random = 10;
  std::string first = canonical_dump(run_scenario("thm1-roundtrip", a).report);
  std::string second = canonical_dump(run_scenario("thm1-roundtrip", a).report);
  CHECK(first == second);
  a.seed = 8;  // a different seed must change the digest but keep determinism
  std::string shifted = canonical_dump(run_scenario("thm1-roundtrip", a).report);
  CHECK(shifted != first);
  CHECK(shifted == canonical_dump(run_scenario("thm1-roundtrip", a).report));
}

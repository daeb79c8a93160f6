// Exercises the C interface (fmb.h) through the shared library only: status
// codes, error reporting, the operation catalog, and the document-handle
// lifecycle. Outputs are inspected with an independent JSON parser.
#include <doctest.h>

#include <string>

#include "fmb.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

// owns a string returned by the library
struct CStr {
  char* s = nullptr;
  ~CStr() { fmb_string_release(s); }
  Json parsed() const {
    REQUIRE(s != nullptr);
    return Json::parse(s);
  }
};

// owns a parsed-document handle
struct Handle {
  fmb_object* h = nullptr;
  ~Handle() { fmb_object_release(h); }
};

// F_2[x]/(x^4) with the augmentation sending x to zero
const char* kTruncPoly = R"({
  "field": 2, "dim": 4, "labels": ["1", "x", "x^2", "x^3"],
  "unit": [1, 0, 0, 0],
  "mult": [[0,0,0,1],[0,1,1,1],[0,2,2,1],[0,3,3,1],
           [1,0,1,1],[1,1,2,1],[1,2,3,1],
           [2,0,2,1],[2,1,3,1],
           [3,0,3,1]],
  "augmentation": [1, 0, 0, 0]
})";

const char* kCyclic4 = R"({
  "p": 2, "order": 4,
  "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
  "labels": ["e", "a", "a2", "a3"]
})";

// Heisenberg relations over F_3: [x,y] = z, all p-th powers zero
const char* kHeisenberg3 = R"({
  "field": 3, "p": 3, "dim": 3, "labels": ["x", "y", "z"],
  "bracket": [[0, 1, 2, 1]],
  "pmap": []
})";

std::string wrap_algebra(const char* body) {
  return std::string("{\"algebra\":") + body + "}";
}

}  // namespace

TEST_CASE("verification statuses distinguish pass from refutation") {
  // the power basis is filtered multiplicative
  std::string good = wrap_algebra(kTruncPoly);
  good.pop_back();
  good += ",\"members\":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}";
  CStr out;
  CHECK(fmb_run_json("fmb/verify", good.c_str(), &out.s) == FMB_OK);
  Json rep = out.parsed();
  CHECK(rep["ok"] == true);
  CHECK(rep["certificate"]["layer_counts"] == Json::array({1, 1, 1, 1}));

  // x^2 * (x + x^3) = x^3, which is not a member: closure fails
  std::string bad = wrap_algebra(kTruncPoly);
  bad.pop_back();
  bad += ",\"members\":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,1,0,1]]}";
  CStr out2;
  CHECK(fmb_run_json("fmb/verify", bad.c_str(), &out2.s) == FMB_REFUTED);
  CHECK(out2.parsed()["ok"] == false);

  // a NULL output slot is allowed when only the status matters
  CHECK(fmb_run_json("fmb/verify", good.c_str(), nullptr) == FMB_OK);
}

TEST_CASE("search over the truncated polynomial algebra reports found") {
  std::string in = wrap_algebra(kTruncPoly);
  in.pop_back();
  in += ",\"budget\":20000,\"seed\":5}";
  CStr out;
  CHECK(fmb_run_json("fmb/search", in.c_str(), &out.s) == FMB_OK);
  Json rep = out.parsed();
  CHECK(rep["status"] == "found");
  CHECK_FALSE(rep["certificate"].is_null());
}

TEST_CASE("invalid input is reported without output") {
  CStr out;
  CHECK(fmb_run_json("fmb/verify", "{not json", &out.s) == FMB_INVALID);
  CHECK(out.s == nullptr);
  CHECK(std::string(fmb_last_error()).size() > 0);

  CHECK(fmb_run_json("no/such/op", "{}", &out.s) == FMB_INVALID);
  CHECK(std::string(fmb_last_error()).find("unknown operation") != std::string::npos);

  // structurally valid JSON that violates the schema
  CHECK(fmb_run_json("fmb/verify", "{\"algebra\":{\"field\":2}}", &out.s) == FMB_INVALID);
  CHECK(fmb_run_json("fmb/verify", nullptr, &out.s) == FMB_INVALID);
  CHECK(fmb_run_json(nullptr, "{}", &out.s) == FMB_INVALID);

  // out-of-range parameter value
  std::string in = wrap_algebra(kTruncPoly);
  in.pop_back();
  in += ",\"budget\":0}";
  CHECK(fmb_run_json("fmb/search", in.c_str(), &out.s) == FMB_INVALID);
}

TEST_CASE("group operations map predicates onto statuses") {
  std::string in = std::string("{\"group\":") + kCyclic4 + "}";
  CStr out;
  CHECK(fmb_run_json("group/powerful", in.c_str(), &out.s) == FMB_OK);
  Json rep = out.parsed();
  CHECK(rep["powerful"] == true);
  CHECK(rep["class"] == 1);

  // the dihedral group of order 8 is not powerful
  CStr d8doc;
  CHECK(fmb_run_json("group/bundled", "{\"name\":\"d8\"}", &d8doc.s) == FMB_OK);
  Json wrapped = d8doc.parsed();
  CHECK(wrapped["name"] == "d8");
  std::string d8in = std::string("{\"group\":") + wrapped["group"].dump() + "}";
  CStr out2;
  CHECK(fmb_run_json("group/powerful", d8in.c_str(), &out2.s) == FMB_REFUTED);
  CHECK(out2.parsed()["powerful"] == false);

  // catalog listing and rejection of unknown names
  CStr names;
  CHECK(fmb_run_json("group/bundled", "{}", &names.s) == FMB_OK);
  CHECK(names.parsed()["names"].size() >= 8);
  CStr none;
  CHECK(fmb_run_json("group/bundled", "{\"name\":\"nope\"}", &none.s) == FMB_INVALID);
}

TEST_CASE("conversion produces canonical documents") {
  std::string in = std::string("{\"to\":\"algebra\",\"input\":") + kCyclic4 + "}";
  CStr out;
  CHECK(fmb_run_json("convert", in.c_str(), &out.s) == FMB_OK);
  Json alg = out.parsed();
  CHECK(alg["dim"] == 4);
  CHECK(alg["field"] == 2);
  CHECK(alg.contains("augmentation"));
}

TEST_CASE("nonexistence certificate statuses") {
  std::string in = std::string("{\"lie\":") + kHeisenberg3 + "}";
  CStr out;
  CHECK(fmb_run_json("fmb/certify-heisenberg", in.c_str(), &out.s) == FMB_OK);
  Json rep = out.parsed();
  CHECK(rep["refuted"] == true);
  CHECK(rep["pairs_surviving"] == 0);
}

TEST_CASE("restricted-series operations run end to end") {
  std::string in = std::string("{\"lie\":") + kHeisenberg3 + "}";
  CStr out;
  CHECK(fmb_run_json("lie/omega", in.c_str(), &out.s) == FMB_OK);
  Json rep = out.parsed();
  CHECK(rep["matches_radical"] == true);
  CHECK(rep["nilindex"] == 9);
  CHECK(rep["graded_dims"] == Json::array({1, 2, 4, 4, 5, 4, 4, 2, 1}));
}

TEST_CASE("scenario operations are exposed and deterministic") {
  CStr a, b;
  CHECK(fmb_run_json("scenario/lemma2", "{}", &a.s) == FMB_OK);
  CHECK(fmb_run_json("scenario/lemma2", "{}", &b.s) == FMB_OK);
  REQUIRE(a.s != nullptr);
  REQUIRE(b.s != nullptr);
  CHECK(std::string(a.s) == std::string(b.s));
  Json rep = a.parsed();
  CHECK(rep["scenario"] == "lemma2");
  for (const Json& c : rep["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("document handles validate, classify, and feed operations") {
  Handle h;
  REQUIRE(fmb_object_parse(kCyclic4, &h.h) == FMB_OK);
  CHECK(std::string(fmb_object_kind(h.h)) == "group");

  CStr dump;
  CHECK(fmb_object_dump(h.h, &dump.s) == FMB_OK);
  Json doc = dump.parsed();
  CHECK(doc["order"] == 4);

  CStr out;
  CHECK(fmb_run("group/powerful", h.h, &out.s) == FMB_OK);
  CStr jen;
  CHECK(fmb_run("group/jennings", h.h, &jen.s) == FMB_OK);
  Json rep = jen.parsed();
  CHECK(rep["chain_orders"][0] == 4);
  CHECK(rep["lie"]["dim"] == 2);

  // invalid documents never yield a handle
  Handle bad;
  CHECK(fmb_object_parse("{\"p\":3,\"order\":2,\"table\":[[0,1],[1,0]]}", &bad.h) == FMB_INVALID);
  CHECK(bad.h == nullptr);
  CHECK(fmb_object_kind(nullptr) == nullptr);
  CHECK(fmb_run("group/powerful", nullptr, nullptr) == FMB_INVALID);
}

TEST_CASE("operation catalog is enumerable") {
  int n = fmb_op_count();
  CHECK(n >= 25);
  bool saw_verify = false, saw_scenario = false;
  for (int i = 0; i < n; ++i) {
    const char* name = fmb_op_name(i);
    REQUIRE(name != nullptr);
    if (std::string(name) == "fmb/verify") saw_verify = true;
    if (std::string(name) == "scenario/lemma2") saw_scenario = true;
  }
  CHECK(saw_verify);
  CHECK(saw_scenario);
  CHECK(fmb_op_name(-1) == nullptr);
  CHECK(fmb_op_name(n) == nullptr);
  CHECK(std::string(fmb_version()) == "1.0.0");
}

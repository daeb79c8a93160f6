#include <doctest.h>

#include "fmb/json_io.hpp"
#include "fixtures.hpp"

using namespace fmb;
using fmbtest::make_truncated_poly;
using fmbtest::make_word_algebra;

namespace {

// round-trips a document through text and checks byte-identical output
std::string stable_dump(const Json& j) {
  std::string text = canonical_dump(j);
  Json back = json_parse(text);
  REQUIRE(canonical_dump(back) == text);
  return text;
}

bool algebras_equal(const Algebra& A, const Algebra& B) {
  if (A.field != B.field || A.dim != B.dim || A.unit != B.unit) return false;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (A.basis_product(i, j) != B.basis_product(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("scalar and field encodings") {
  Field F3 = Field::prime(3);
  CHECK(scalar_to_json(F3, F3.from_int(2)) == Json(2));
  CHECK(scalar_from_json(F3, Json(-1)) == F3.from_int(2));
  CHECK(field_from_json(field_to_json(F3)) == F3);

  Field R2 = Field::rational(2);
  Scalar t = R2.t();
  Json jt = scalar_to_json(R2, t);
  CHECK(jt["num"] == Json::array({0, 1}));
  CHECK(jt["den"] == Json::array({1}));
  CHECK(scalar_from_json(R2, jt) == t);
  // a fraction arrives canonicalized: (t^2+t)/t = t+1
  Json frac = Json::object();
  frac["num"] = Json::array({0, 1, 1});
  frac["den"] = Json::array({0, 1});
  CHECK(scalar_from_json(R2, frac) == R2.add(t, R2.one()));
  // integers are accepted as constants
  CHECK(scalar_from_json(R2, Json(1)) == R2.one());
  CHECK(field_from_json(field_to_json(R2)) == R2);

  CHECK_THROWS_AS(scalar_from_json(F3, Json("x")), std::invalid_argument);
  CHECK_THROWS_AS(field_from_json(Json(4)), std::invalid_argument);
  Json zero_den = Json::object();
  zero_den["num"] = Json::array({1});
  zero_den["den"] = Json::array({0});
  CHECK_THROWS_AS(scalar_from_json(R2, zero_den), std::invalid_argument);
}

TEST_CASE("algebra serialization round trip") {
  Field F2 = Field::prime(2);
  auto W = make_word_algebra(F2, 2, 3);  // dim 7
  AugmentedAlgebra A(W.alg, W.eps);

  Json doc = algebra_to_json(A);
  std::string text = stable_dump(doc);
  CHECK(doc["dim"] == Json(7));
  CHECK(doc.contains("augmentation"));

  AugmentedAlgebra back = augmented_algebra_from_json(json_parse(text));
  CHECK(algebras_equal(A.alg(), back.alg()));
  CHECK(back.eps() == A.eps());
  CHECK(back.alg().labels == A.alg().labels);
  // canonical re-serialization is byte-identical
  CHECK(canonical_dump(algebra_to_json(back)) == text);

  // the bare-algebra reader ignores the augmentation key
  Algebra bare = algebra_from_json(doc);
  CHECK(algebras_equal(bare, A.alg()));
}

TEST_CASE("algebra schema violations are rejected") {
  Field F2 = Field::prime(2);
  auto W = make_truncated_poly(F2, 3);
  Json doc = algebra_to_json(AugmentedAlgebra(W.alg, W.eps));

  Json missing = doc;
  missing.erase("unit");
  CHECK_THROWS_AS(algebra_from_json(missing), std::invalid_argument);

  Json index_out = doc;
  index_out["mult"].push_back(Json::array({0, 0, 9, 1}));
  CHECK_THROWS_AS(algebra_from_json(index_out), std::invalid_argument);

  Json bad_row = doc;
  bad_row["mult"].push_back(Json::array({0, 0, 1}));
  CHECK_THROWS_AS(algebra_from_json(bad_row), std::invalid_argument);

  // a non-associative table is caught by validation, not just shape checks
  Json non_assoc = doc;
  non_assoc["mult"] = Json::array({Json::array({1, 1, 0, 1})});
  CHECK_THROWS_AS(algebra_from_json(non_assoc), std::invalid_argument);

  // augmentation that is not multiplicative
  Json bad_eps = doc;
  bad_eps["augmentation"] = Json::array({1, 1, 0});
  CHECK_THROWS_AS(augmented_algebra_from_json(bad_eps), std::invalid_argument);

  CHECK_THROWS_AS(json_parse("{not json"), std::invalid_argument);
}

TEST_CASE("restricted Lie algebra serialization round trip") {
  Field F3 = Field::prime(3);
  RestrictedLieAlgebra H = make_heisenberg3(F3);
  Json doc = lie_to_json(H);
  std::string text = stable_dump(doc);
  CHECK(doc["p"] == Json(3));
  CHECK(doc["bracket"].size() == 1);  // only the (0,1) orientation is written

  RestrictedLieAlgebra back = lie_from_json(json_parse(text));
  CHECK(back.dim == H.dim);
  CHECK(back.bracket_table == H.bracket_table);
  CHECK(back.pmap == H.pmap);
  CHECK(canonical_dump(lie_to_json(back)) == text);

  // the family over F_2(t) round-trips including rational coefficients
  Field R2 = Field::rational(2);
  RestrictedLieAlgebra L = make_alpha_family(R2, R2.t());
  Json ldoc = lie_to_json(L);
  stable_dump(ldoc);
  RestrictedLieAlgebra lback = lie_from_json(ldoc);
  CHECK(lback.pmap == L.pmap);
  CHECK(lback.field == R2);

  // lower-orientation input is completed by antisymmetry
  Json lower = doc;
  lower["bracket"] = Json::array({Json::array({1, 0, 2, 2})});  // [y,x] = -z
  RestrictedLieAlgebra from_lower = lie_from_json(lower);
  CHECK(from_lower.bracket_table == H.bracket_table);

  // inconsistent double entries are rejected
  Json clash = doc;
  clash["bracket"] = Json::array({Json::array({0, 1, 2, 1}), Json::array({1, 0, 2, 1})});
  CHECK_THROWS_AS(lie_from_json(clash), std::invalid_argument);

  // a table that breaks the Jacobi/restrictedness validation is rejected
  Json broken = doc;
  broken["pmap"] = Json::array({Json::array({2, 0, 1})});  // z^[p] = x is not restricted here
  CHECK_THROWS_AS(lie_from_json(broken), std::invalid_argument);
}

TEST_CASE("group serialization round trip") {
  for (const Group& G : {make_dihedral8(), make_quaternion8(), make_extraspecial27(true)}) {
    Json doc = group_to_json(G);
    std::string text = stable_dump(doc);
    Group back = group_from_json(json_parse(text));
    CHECK(back.order == G.order);
    CHECK(back.table == G.table);
    CHECK(back.labels == G.labels);
    CHECK(back.p == G.p);
    CHECK(canonical_dump(group_to_json(back)) == text);
  }

  Json doc = group_to_json(make_dihedral8());
  Json wrong_p = doc;
  wrong_p["p"] = 3;
  CHECK_THROWS_AS(group_from_json(wrong_p), std::invalid_argument);

  Json torn = doc;
  torn["table"][0][0] = 5;  // identity row no longer fixes elements
  CHECK_THROWS_AS(group_from_json(torn), std::invalid_argument);

  Json ragged = doc;
  ragged["table"][1] = Json::array({0, 1});
  CHECK_THROWS_AS(group_from_json(ragged), std::invalid_argument);
}

TEST_CASE("certificate serialization round trip") {
  Field F2 = Field::prime(2);
  auto W = make_truncated_poly(F2, 4);
  AugmentedAlgebra A(W.alg, W.eps);
  std::vector<Vec> members;
  for (int i = 0; i < 4; ++i) members.push_back(A.alg().e(i));
  FmbVerifyReport rep = verify_fmb(A, members);
  REQUIRE(rep.ok);

  Json doc = certificate_to_json(F2, *rep.cert);
  std::string text = stable_dump(doc);
  FmbCertificate back = certificate_from_json(F2, json_parse(text), A.dim());
  CHECK(back.members == rep.cert->members);
  CHECK(back.table.cell == rep.cert->table.cell);
  CHECK(back.depths == rep.cert->depths);
  CHECK(back.layer_counts == rep.cert->layer_counts);

  Json short_table = doc;
  short_table["table"] = Json::array();
  CHECK_THROWS_AS(certificate_from_json(F2, short_table, A.dim()), std::invalid_argument);
}

TEST_CASE("report writers emit stable documents") {
  Field F2 = Field::prime(2);
  auto W = make_truncated_poly(F2, 4);
  AugmentedAlgebra A(W.alg, W.eps);

  SearchOutcome out = closure_search_fmb(A, SearchOptions{});
  REQUIRE(out.status == SearchStatus::found);
  Json sj = search_outcome_to_json(F2, out);
  CHECK(sj["status"] == Json("found"));
  stable_dump(sj);

  RestrictedLieAlgebra H3 = make_heisenberg3(Field::prime(3));
  HeisenbergCertificate cert = certify_heisenberg_type(H3);
  Json hj = heisenberg_certificate_to_json(cert);
  CHECK(hj["refuted"] == Json(true));
  stable_dump(hj);

  Group D8 = make_dihedral8();
  Json qj = quillen_report_to_json(quillen_check(D8, F2));
  CHECK(qj["ok"] == Json(true));
  CHECK(qj["graded_dims_group"] == Json::array({1, 2, 2, 2, 1}));
  stable_dump(qj);
}

TEST_CASE("digest helper is stable and order-sensitive") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  Json a = Json::object();
  a["x"] = 1;
  a["y"] = 2;
  Json b = Json::object();
  b["y"] = 2;
  b["x"] = 1;
  CHECK(json_digest(a) == json_digest(a));
  CHECK(json_digest(a) != json_digest(b));  // ordered documents: key order is content
}

TEST_CASE("schema detection and lossless conversion") {
  Group D8 = make_dihedral8();
  Json gdoc = group_to_json(D8);
  CHECK(json_schema_kind(gdoc) == "group");

  // group -> algebra produces the group algebra with its augmentation
  Json adoc = json_convert(gdoc, "algebra");
  CHECK(json_schema_kind(adoc) == "algebra");
  AugmentedAlgebra GA = augmented_algebra_from_json(adoc);
  CHECK(GA.dim() == 8);
  CHECK(GA.radical().dim() == 7);

  // lie -> algebra produces the restricted envelope
  Json ldoc = lie_to_json(make_heisenberg3(Field::prime(3)));
  CHECK(json_schema_kind(ldoc) == "lie");
  Json edoc = json_convert(ldoc, "algebra");
  AugmentedAlgebra E = augmented_algebra_from_json(edoc);
  CHECK(E.dim() == 27);

  // identity conversions canonicalize
  CHECK(json_convert(gdoc, "group") == gdoc);
  CHECK(json_convert(ldoc, "lie") == ldoc);
  CHECK(json_convert(adoc, "algebra") == adoc);

  CHECK_THROWS_AS(json_convert(adoc, "group"), std::invalid_argument);
  CHECK_THROWS_AS(json_convert(gdoc, "lie"), std::invalid_argument);
  CHECK_THROWS_AS(json_convert(gdoc, "nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(json_schema_kind(Json::object()), std::invalid_argument);
}

#include "fmb/json_io.hpp"

#include <algorithm>
#include <map>

namespace fmb {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

const Json& need_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a JSON array");
  return j;
}

int64_t need_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int64_t>();
}

int64_t need_int_range(const Json& j, const char* what, int64_t lo, int64_t hi) {
  int64_t v = need_int(j, what);
  if (v < lo || v > hi)
    bad(std::string(what) + " = " + std::to_string(v) + " out of range [" + std::to_string(lo) +
        ", " + std::to_string(hi) + "]");
  return v;
}

// coefficient array of a polynomial: integers reduced mod p, little-endian
Poly poly_from_json(uint32_t p, const Json& j, const char* what) {
  need_array(j, what);
  Poly out;
  out.reserve(j.size());
  for (const Json& c : j) {
    int64_t v = need_int(c, what) % static_cast<int64_t>(p);
    if (v < 0) v += p;
    out.push_back(static_cast<uint32_t>(v));
  }
  poly_trim(out);
  return out;
}

Json poly_to_json(const Poly& a) {
  Json out = Json::array();
  for (uint32_t c : a) out.push_back(c);
  return out;
}

std::vector<std::string> labels_from_json(const Json& j, int dim) {
  if (!j.contains("labels")) return {};
  const Json& l = need_array(j.at("labels"), "labels");
  if (l.empty()) return {};
  if (static_cast<int>(l.size()) != dim)
    bad("labels has " + std::to_string(l.size()) + " entries, expected " + std::to_string(dim));
  std::vector<std::string> out;
  out.reserve(l.size());
  for (const Json& s : l) {
    if (!s.is_string()) bad("labels entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json labels_to_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const std::string& s : labels) out.push_back(s);
  return out;
}

Json ints_to_json(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

void first_issue_throws(const std::vector<ValidationIssue>& issues, const char* what) {
  if (!issues.empty()) bad(std::string(what) + ": " + issues.front().what);
}

}  // namespace

// ---- plumbing -------------------------------------------------------------

Json json_parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string json_digest(const Json& j) { return fnv1a64_hex(j.dump()); }

const Json& json_member(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object holding key \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad("missing key \"" + std::string(key) + "\"");
  return *it;
}

int64_t json_int(const Json& j, const char* key, int64_t lo, int64_t hi,
                 std::optional<int64_t> fallback) {
  if (j.is_object() && !j.contains(key) && fallback) return *fallback;
  return need_int_range(json_member(j, key), key, lo, hi);
}

bool json_bool(const Json& j, const char* key, std::optional<bool> fallback) {
  if (j.is_object() && !j.contains(key) && fallback) return *fallback;
  const Json& v = json_member(j, key);
  if (!v.is_boolean()) bad("key \"" + std::string(key) + "\" must be a boolean");
  return v.get<bool>();
}

std::string json_string(const Json& j, const char* key, const char* fallback) {
  if (j.is_object() && !j.contains(key) && fallback) return fallback;
  const Json& v = json_member(j, key);
  if (!v.is_string()) bad("key \"" + std::string(key) + "\" must be a string");
  return v.get<std::string>();
}

// ---- scalars and vectors --------------------------------------------------

Json field_to_json(const Field& F) {
  if (F.kind() == FieldKind::Prime) return Json(F.p());
  Json out = Json::object();
  out["kind"] = "ratfunc";
  out["p"] = F.p();
  return out;
}

Field field_from_json(const Json& j) {
  if (j.is_number_integer())
    return Field::prime(static_cast<uint32_t>(need_int_range(j, "field", 2, 251)));
  if (j.is_object()) {
    std::string kind = json_string(j, "kind", "prime");
    uint32_t p = static_cast<uint32_t>(json_int(j, "p", 2, 251));
    if (kind == "prime") return Field::prime(p);
    if (kind == "ratfunc") return Field::rational(p);
    bad("unknown field kind \"" + kind + "\"");
  }
  bad("field must be an integer characteristic or {\"kind\":...,\"p\":...}");
}

Json scalar_to_json(const Field& F, const Scalar& a) {
  if (F.kind() == FieldKind::Prime) return Json(a.res());
  Json out = Json::object();
  out["num"] = poly_to_json(a.rat().num);
  out["den"] = poly_to_json(a.rat().den);
  return out;
}

Scalar scalar_from_json(const Field& F, const Json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<int64_t>());
  if (F.kind() == FieldKind::RatFunc && j.is_object()) {
    Poly num = poly_from_json(F.p(), json_member(j, "num"), "num");
    Poly den = poly_from_json(F.p(), json_member(j, "den"), "den");
    if (poly_is_zero(den)) bad("zero denominator");
    return F.from_fraction(std::move(num), std::move(den));
  }
  bad(F.kind() == FieldKind::Prime
          ? "prime-field scalar must be an integer"
          : "scalar must be an integer or {\"num\":[...],\"den\":[...]}");
}

Json vec_to_json(const Field& F, const Vec& v) {
  Json out = Json::array();
  for (const Scalar& a : v) out.push_back(scalar_to_json(F, a));
  return out;
}

Vec vec_from_json(const Field& F, const Json& j, int expect_dim) {
  need_array(j, "vector");
  if (expect_dim >= 0 && static_cast<int>(j.size()) != expect_dim)
    bad("vector has " + std::to_string(j.size()) + " coordinates, expected " +
        std::to_string(expect_dim));
  Vec out;
  out.reserve(j.size());
  for (const Json& c : j) out.push_back(scalar_from_json(F, c));
  return out;
}

Json basis_to_json(const Field& F, const std::vector<Vec>& rows) {
  Json out = Json::array();
  for (const Vec& v : rows) out.push_back(vec_to_json(F, v));
  return out;
}

std::vector<Vec> basis_from_json(const Field& F, const Json& j, int expect_dim) {
  need_array(j, "basis");
  std::vector<Vec> out;
  out.reserve(j.size());
  for (const Json& row : j) out.push_back(vec_from_json(F, row, expect_dim));
  return out;
}

// ---- algebra ---------------------------------------------------------------

namespace {

Json algebra_body(const Algebra& A, const Vec* eps) {
  Json out = Json::object();
  out["field"] = field_to_json(A.field);
  out["dim"] = A.dim;
  out["labels"] = labels_to_json(A.labels);
  out["unit"] = vec_to_json(A.field, A.unit);
  Json mult = Json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      std::vector<std::pair<int, Scalar>> terms = A.table(i, j);
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, c] : terms) {
        if (A.field.is_zero(c)) continue;
        mult.push_back(Json::array({i, j, k, scalar_to_json(A.field, c)}));
      }
    }
  out["mult"] = std::move(mult);
  if (eps) out["augmentation"] = vec_to_json(A.field, *eps);
  return out;
}

}  // namespace

Json algebra_to_json(const Algebra& A) { return algebra_body(A, nullptr); }

Json algebra_to_json(const AugmentedAlgebra& A) { return algebra_body(A.alg(), &A.eps()); }

Algebra algebra_from_json(const Json& j) {
  Algebra A;
  A.field = field_from_json(json_member(j, "field"));
  A.dim = static_cast<int>(json_int(j, "dim", 1, 4096));
  A.labels = labels_from_json(j, A.dim);
  A.unit = vec_from_json(A.field, json_member(j, "unit"), A.dim);
  A.mult.assign(static_cast<size_t>(A.dim) * A.dim, {});
  // accumulate coefficients so repeated (i,j,k) rows stay well-defined
  std::map<std::pair<int, int>, std::map<int, Scalar>> acc;
  for (const Json& row : need_array(json_member(j, "mult"), "mult")) {
    need_array(row, "mult entry");
    if (row.size() != 4) bad("mult entries must be [i, j, k, coeff]");
    int i = static_cast<int>(need_int_range(row[0], "mult index i", 0, A.dim - 1));
    int jj = static_cast<int>(need_int_range(row[1], "mult index j", 0, A.dim - 1));
    int k = static_cast<int>(need_int_range(row[2], "mult index k", 0, A.dim - 1));
    Scalar c = scalar_from_json(A.field, row[3]);
    auto& cell = acc[{i, jj}];
    auto it = cell.find(k);
    if (it == cell.end())
      cell.emplace(k, c);
    else
      it->second = A.field.add(it->second, c);
  }
  for (const auto& [ij, cell] : acc) {
    std::vector<std::pair<int, Scalar>> terms;
    for (const auto& [k, c] : cell)
      if (!A.field.is_zero(c)) terms.emplace_back(k, c);
    A.set_table(ij.first, ij.second, std::move(terms));
  }
  first_issue_throws(validate_algebra(A), "algebra");
  return A;
}

AugmentedAlgebra augmented_algebra_from_json(const Json& j) {
  Algebra A = algebra_from_json(j);
  Vec eps = vec_from_json(A.field, json_member(j, "augmentation"), A.dim);
  return AugmentedAlgebra(std::move(A), std::move(eps));
}

// ---- restricted Lie algebra ------------------------------------------------

Json lie_to_json(const RestrictedLieAlgebra& L) {
  Json out = Json::object();
  out["field"] = field_to_json(L.field);
  out["p"] = L.field.p();
  out["dim"] = L.dim;
  out["labels"] = labels_to_json(L.labels);
  Json bracket = Json::array();
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      const Vec& v = L.bracket_basis(i, j);
      for (int k = 0; k < L.dim; ++k)
        if (!L.field.is_zero(v[k]))
          bracket.push_back(Json::array({i, j, k, scalar_to_json(L.field, v[k])}));
    }
  out["bracket"] = std::move(bracket);
  Json pmap = Json::array();
  for (int i = 0; i < L.dim; ++i)
    for (int k = 0; k < L.dim; ++k)
      if (!L.field.is_zero(L.pmap[i][k]))
        pmap.push_back(Json::array({i, k, scalar_to_json(L.field, L.pmap[i][k])}));
  out["pmap"] = std::move(pmap);
  return out;
}

RestrictedLieAlgebra lie_from_json(const Json& j) {
  RestrictedLieAlgebra L;
  if (j.contains("field"))
    L.field = field_from_json(j.at("field"));
  else
    L.field = Field::prime(static_cast<uint32_t>(json_int(j, "p", 2, 251)));
  if (j.contains("p") && json_int(j, "p", 2, 251) != L.field.p())
    bad("declared characteristic disagrees with the field");
  L.dim = static_cast<int>(json_int(j, "dim", 1, 64));
  L.labels = labels_from_json(j, L.dim);
  L.bracket_table.assign(static_cast<size_t>(L.dim) * L.dim, zero_vec(L.field, L.dim));
  L.pmap.assign(L.dim, zero_vec(L.field, L.dim));
  std::vector<bool> given(static_cast<size_t>(L.dim) * L.dim, false);
  if (j.contains("bracket")) {
    for (const Json& row : need_array(j.at("bracket"), "bracket")) {
      need_array(row, "bracket entry");
      if (row.size() != 4) bad("bracket entries must be [i, j, k, coeff]");
      int a = static_cast<int>(need_int_range(row[0], "bracket index i", 0, L.dim - 1));
      int b = static_cast<int>(need_int_range(row[1], "bracket index j", 0, L.dim - 1));
      int k = static_cast<int>(need_int_range(row[2], "bracket index k", 0, L.dim - 1));
      Scalar c = scalar_from_json(L.field, row[3]);
      if (a == b && !L.field.is_zero(c)) bad("bracket of a basis vector with itself must vanish");
      size_t cell = static_cast<size_t>(a) * L.dim + b;
      L.bracket_table[cell][k] = L.field.add(L.bracket_table[cell][k], c);
      given[cell] = true;
    }
    // complete the unwritten orientation; reject inconsistent double entries
    for (int a = 0; a < L.dim; ++a)
      for (int b = a + 1; b < L.dim; ++b) {
        size_t up = static_cast<size_t>(a) * L.dim + b;
        size_t dn = static_cast<size_t>(b) * L.dim + a;
        if (given[up] && given[dn]) {
          for (int k = 0; k < L.dim; ++k)
            if (L.bracket_table[dn][k] != L.field.neg(L.bracket_table[up][k]))
              bad("bracket entries for (" + std::to_string(a) + "," + std::to_string(b) +
                  ") are not antisymmetric");
        } else if (given[up]) {
          for (int k = 0; k < L.dim; ++k)
            L.bracket_table[dn][k] = L.field.neg(L.bracket_table[up][k]);
        } else if (given[dn]) {
          for (int k = 0; k < L.dim; ++k)
            L.bracket_table[up][k] = L.field.neg(L.bracket_table[dn][k]);
        }
      }
  }
  if (j.contains("pmap")) {
    for (const Json& row : need_array(j.at("pmap"), "pmap")) {
      need_array(row, "pmap entry");
      if (row.size() != 3) bad("pmap entries must be [i, k, coeff]");
      int i = static_cast<int>(need_int_range(row[0], "pmap index i", 0, L.dim - 1));
      int k = static_cast<int>(need_int_range(row[1], "pmap index k", 0, L.dim - 1));
      Scalar c = scalar_from_json(L.field, row[2]);
      L.pmap[i][k] = L.field.add(L.pmap[i][k], c);
    }
  }
  first_issue_throws(validate_restricted(L), "lie algebra");
  return L;
}

// ---- group -----------------------------------------------------------------

Json group_to_json(const Group& G) {
  Json out = Json::object();
  out["p"] = G.p;
  out["order"] = G.order;
  Json table = Json::array();
  for (int a = 0; a < G.order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < G.order; ++b) row.push_back(G.table[static_cast<size_t>(a) * G.order + b]);
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  out["labels"] = labels_to_json(G.labels);
  return out;
}

Group group_from_json(const Json& j) {
  int order = static_cast<int>(json_int(j, "order", 1, 1024));
  const Json& table = need_array(json_member(j, "table"), "table");
  if (static_cast<int>(table.size()) != order)
    bad("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(order));
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (const Json& row : table) {
    need_array(row, "table row");
    if (static_cast<int>(row.size()) != order) bad("table rows must have length equal to the order");
    for (const Json& cell : row)
      flat.push_back(static_cast<int>(need_int_range(cell, "table entry", 0, order - 1)));
  }
  Group G = group_from_table(order, std::move(flat), labels_from_json(j, order));
  if (j.contains("p") && json_int(j, "p", 2, 251) != G.p)
    bad("declared prime disagrees with the group order");
  return G;
}

// ---- certificates ----------------------------------------------------------

Json certificate_to_json(const Field& F, const FmbCertificate& c) {
  Json out = Json::object();
  out["members"] = basis_to_json(F, c.members);
  Json table = Json::array();
  for (int i = 0; i < c.table.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < c.table.n; ++j) row.push_back(c.table.at(i, j));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  out["depths"] = ints_to_json(c.depths);
  out["layer_counts"] = ints_to_json(c.layer_counts);
  return out;
}

FmbCertificate certificate_from_json(const Field& F, const Json& j, int expect_dim) {
  FmbCertificate c;
  c.members = basis_from_json(F, json_member(j, "members"), expect_dim);
  int n = static_cast<int>(c.members.size());
  const Json& table = need_array(json_member(j, "table"), "table");
  if (static_cast<int>(table.size()) != n) bad("certificate table must have one row per member");
  c.table.n = n;
  c.table.cell.reserve(static_cast<size_t>(n) * n);
  for (const Json& row : table) {
    need_array(row, "table row");
    if (static_cast<int>(row.size()) != n) bad("certificate table rows must have one entry per member");
    for (const Json& cell : row)
      c.table.cell.push_back(static_cast<int>(need_int_range(cell, "table entry", -1, n - 1)));
  }
  const Json& depths = need_array(json_member(j, "depths"), "depths");
  if (static_cast<int>(depths.size()) != n) bad("depths must have one entry per member");
  for (const Json& d : depths)
    c.depths.push_back(static_cast<int>(need_int_range(d, "depth", 0, 1 << 20)));
  const Json& counts = need_array(json_member(j, "layer_counts"), "layer_counts");
  for (const Json& d : counts)
    c.layer_counts.push_back(static_cast<int>(need_int_range(d, "layer count", 0, 1 << 20)));
  return c;
}

// ---- report writers --------------------------------------------------------

namespace {

Json strings_to_json(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const std::string& s : v) out.push_back(s);
  return out;
}

Json int_rows_to_json(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const std::vector<int>& r : rows) out.push_back(ints_to_json(r));
  return out;
}

}  // namespace

Json verify_report_to_json(const Field& F, const FmbVerifyReport& r) {
  Json out = Json::object();
  out["ok"] = r.ok;
  out["failures"] = strings_to_json(r.failures);
  out["certificate"] = r.cert ? certificate_to_json(F, *r.cert) : Json(nullptr);
  return out;
}

Json search_outcome_to_json(const Field& F, const SearchOutcome& o) {
  Json out = Json::object();
  switch (o.status) {
    case SearchStatus::found: out["status"] = "found"; break;
    case SearchStatus::none_exhaustive: out["status"] = "exhausted"; break;
    case SearchStatus::none_budget: out["status"] = "budget-exceeded"; break;
  }
  out["exhaustive"] = o.exhaustive;
  out["candidates_tried"] = o.candidates_tried;
  out["generators"] = basis_to_json(F, o.generators);
  out["certificate"] = o.cert ? certificate_to_json(F, *o.cert) : Json(nullptr);
  return out;
}

Json ray_decomposition_to_json(const Field& F, const RayDecomposition& r) {
  Json out = Json::object();
  out["regular"] = r.regular;
  out["i0"] = ints_to_json(r.i0);
  out["i1"] = ints_to_json(r.i1);
  out["partner"] = ints_to_json(r.partner);
  out["i3"] = ints_to_json(r.i3);
  out["kernel_members"] = basis_to_json(F, r.kernel_members);
  out["witness"] = r.witness ? vec_to_json(F, *r.witness) : Json(nullptr);
  return out;
}

Json probe_report_to_json(const Field& F, const ProbeReport& r) {
  Json out = Json::object();
  out["orderings"] = int_rows_to_json(r.orderings);
  out["span_dim"] = r.span_dim;
  out["distinct_nonzero"] = r.distinct_nonzero;
  out["collision_groups"] = int_rows_to_json(r.collision_groups);
  Json facts = Json::array();
  for (const ProbeFact& f : r.facts) {
    Json fj = Json::object();
    fj["name"] = f.name;
    fj["holds"] = f.holds;
    fj["detail"] = f.detail;
    facts.push_back(std::move(fj));
  }
  out["facts"] = std::move(facts);
  out["contradiction"] = r.contradiction;
  out["statement"] = r.statement;
  out["products"] = basis_to_json(F, r.products);
  out["images"] = basis_to_json(F, r.images);
  return out;
}

Json heisenberg_certificate_to_json(const HeisenbergCertificate& c) {
  Json out = Json::object();
  out["applicable"] = c.applicable;
  out["refuted"] = c.refuted;
  out["pairs_checked"] = c.pairs_checked;
  out["pairs_surviving"] = c.pairs_surviving;
  out["verdict"] = c.verdict;
  Json stages = Json::array();
  for (const HeisenbergStage& s : c.stages) {
    Json sj = Json::object();
    sj["name"] = s.name;
    sj["ok"] = s.ok;
    sj["detail"] = s.detail;
    stages.push_back(std::move(sj));
  }
  out["stages"] = std::move(stages);
  return out;
}

Json quillen_report_to_json(const QuillenReport& r) {
  Json out = Json::object();
  out["ok"] = r.ok;
  out["dim"] = r.dim;
  out["graded_dims_group"] = ints_to_json(r.graded_dims_group);
  out["graded_dims_env"] = ints_to_json(r.graded_dims_env);
  out["failures"] = strings_to_json(r.failures);
  return out;
}

Json group_verdict_to_json(const Field& F, const GroupVerdict& v) {
  Json out = Json::object();
  out["group_class"] = v.group_class;
  out["powerful"] = v.powerful;
  out["lie_class"] = v.lie_class;
  out["lie_generators"] = v.lie_generators;
  out["no_fmb"] = v.no_fmb;
  out["branch"] = v.branch;
  out["verdict"] = v.verdict;
  out["probe"] = v.probe ? probe_report_to_json(F, *v.probe) : Json(nullptr);
  out["search"] = v.search ? search_outcome_to_json(F, *v.search) : Json(nullptr);
  return out;
}

Json word_image_basis_to_json(const Field& F, const WordImageBasis& w) {
  Json out = Json::object();
  out["spans"] = w.spans;
  out["members"] = basis_to_json(F, w.members);
  out["words"] = int_rows_to_json(w.words);
  Json collisions = Json::array();
  for (const CollisionGroup& g : w.collisions) {
    Json gj = Json::object();
    gj["member"] = g.member;
    gj["words"] = int_rows_to_json(g.words);
    collisions.push_back(std::move(gj));
  }
  out["collisions"] = std::move(collisions);
  return out;
}

Json cyclic_decomposition_to_json(const Field& F, const CyclicDecomposition& d) {
  Json out = Json::object();
  out["decomposable"] = d.decomposable;
  Json summands = Json::array();
  for (const CyclicSummand& s : d.summands) {
    Json sj = Json::object();
    sj["length"] = s.length;
    sj["chain"] = basis_to_json(F, s.chain);
    summands.push_back(std::move(sj));
  }
  out["summands"] = std::move(summands);
  out["obstruction"] = d.obstruction;
  out["witness"] = d.non_power_witness ? scalar_to_json(F, *d.non_power_witness) : Json(nullptr);
  return out;
}

// ---- schema detection and conversion ---------------------------------------

std::string json_schema_kind(const Json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  if (j.contains("table") && j.contains("order")) return "group";
  if (j.contains("bracket") || j.contains("pmap")) return "lie";
  if (j.contains("mult")) return "algebra";
  bad("input matches no known schema (expected group, lie, or algebra keys)");
}

Json json_convert(const Json& input, const std::string& to) {
  std::string from = json_schema_kind(input);
  if (to != "group" && to != "lie" && to != "algebra")
    bad("unknown conversion target \"" + to + "\"");
  if (from == to) {
    if (from == "group") return group_to_json(group_from_json(input));
    if (from == "lie") return lie_to_json(lie_from_json(input));
    if (input.contains("augmentation")) return algebra_to_json(augmented_algebra_from_json(input));
    return algebra_to_json(algebra_from_json(input));
  }
  if (from == "group" && to == "algebra") {
    Group G = group_from_json(input);
    return algebra_to_json(group_algebra(G, Field::prime(G.p)));
  }
  if (from == "lie" && to == "algebra") {
    RestrictedLieAlgebra L = lie_from_json(input);
    return algebra_to_json(build_envelope(L).algebra);
  }
  bad("no lossless conversion from " + from + " to " + to);
}

}  // namespace fmb

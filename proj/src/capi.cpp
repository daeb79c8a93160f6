#include "fmb.h"

#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fmb/json_io.hpp"
#include "fmb/scenario.hpp"

#define FMB_EXPORT __attribute__((visibility("default")))

using namespace fmb;

struct fmb_object {
  std::string kind;
  Json doc;
};

namespace {

thread_local std::string g_last_error = "no error";

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// one operation: consumes the input document, returns status + output document
using Handler = std::function<fmb_status(const Json&, Json&)>;

struct Op {
  std::string name;
  Handler fn;
};

// ---- shared input readers --------------------------------------------------

AugmentedAlgebra read_algebra(const Json& in) {
  return augmented_algebra_from_json(json_member(in, "algebra"));
}

RestrictedLieAlgebra read_lie(const Json& in) { return lie_from_json(json_member(in, "lie")); }

Group read_group(const Json& in) { return group_from_json(json_member(in, "group")); }

std::vector<Vec> read_rows(const Json& in, const char* key, const Field& F, int dim) {
  return basis_from_json(F, json_member(in, key), dim);
}

SearchOptions read_search_options(const Json& in) {
  SearchOptions opt;
  opt.budget = static_cast<uint64_t>(
      json_int(in, "budget", 1, static_cast<int64_t>(1) << 62, static_cast<int64_t>(opt.budget)));
  opt.seed = static_cast<uint64_t>(
      json_int(in, "seed", 0, INT64_MAX, static_cast<int64_t>(opt.seed)));
  opt.rescale_canonical = json_bool(in, "rescale", true);
  return opt;
}

ScenarioArgs read_scenario_args(const Json& in) {
  ScenarioArgs a;
  a.m = static_cast<int>(json_int(in, "m", 0, 32, a.m));
  a.n = static_cast<int>(json_int(in, "n", 0, 32, a.n));
  a.s = static_cast<int>(json_int(in, "s", 1, 32, a.s));
  a.p = static_cast<uint32_t>(json_int(in, "p", 2, 251, a.p));
  a.random = static_cast<int>(json_int(in, "random", 0, 10000, a.random));
  a.seed = static_cast<uint64_t>(json_int(in, "seed", 0, INT64_MAX, static_cast<int64_t>(a.seed)));
  a.budget = static_cast<uint64_t>(json_int(in, "budget", 1, static_cast<int64_t>(1) << 62,
                                            static_cast<int64_t>(a.budget)));
  a.samples = static_cast<uint64_t>(json_int(in, "samples", 1, static_cast<int64_t>(1) << 62,
                                             static_cast<int64_t>(a.samples)));
  return a;
}

Json ints_json(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

// ---- operation table -------------------------------------------------------

fmb_status op_verify(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  FmbVerifyReport rep = verify_fmb(A, read_rows(in, "members", A.field(), A.dim()));
  out = verify_report_to_json(A.field(), rep);
  return rep.ok ? FMB_OK : FMB_REFUTED;
}

fmb_status op_search(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  SearchOutcome res = closure_search_fmb(A, read_search_options(in));
  out = search_outcome_to_json(A.field(), res);
  return res.status == SearchStatus::found ? FMB_OK : FMB_REFUTED;
}

fmb_status op_quotient(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  std::vector<Vec> members = read_rows(in, "members", A.field(), A.dim());
  Subspace K(A.field(), A.dim(), read_rows(in, "ideal", A.field(), A.dim()));
  RayDecomposition rays = ray_decomposition(A, members, K);
  out = Json::object();
  out["rays"] = ray_decomposition_to_json(A.field(), rays);
  if (!rays.regular) {
    out["report"] = nullptr;
    out["quotient"] = nullptr;
    return FMB_REFUTED;
  }
  QuotientBasisResult q = quotient_fmb(A, members, K);
  out["report"] = verify_report_to_json(A.field(), q.report);
  out["quotient"] = algebra_to_json(q.quotient.algebra);
  return q.report.ok ? FMB_OK : FMB_REFUTED;
}

fmb_status op_regular_kernel(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  std::vector<Vec> members = read_rows(in, "members", A.field(), A.dim());
  Subspace K(A.field(), A.dim(), read_rows(in, "ideal", A.field(), A.dim()));
  RayDecomposition rays = ray_decomposition(A, members, K);
  out = ray_decomposition_to_json(A.field(), rays);
  return rays.regular ? FMB_OK : FMB_REFUTED;
}

fmb_status op_gr_transport(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  std::vector<Vec> members = read_rows(in, "members", A.field(), A.dim());
  GradedAlgebra G = associated_graded(A);
  GradedTransportResult tr = transport_fmb_to_gr(A, G, members);
  out = Json::object();
  out["graded_members"] = basis_to_json(A.field(), tr.graded_members);
  out["report"] = verify_report_to_json(A.field(), tr.report);
  out["graded_algebra"] = algebra_to_json(G.algebra);
  return tr.report.ok ? FMB_OK : FMB_REFUTED;
}

fmb_status op_probe(const Json& in, Json& out) {
  AugmentedAlgebra A = read_algebra(in);
  ProbeReport pr = obstruction_probe(A, read_rows(in, "reps", A.field(), A.dim()));
  out = probe_report_to_json(A.field(), pr);
  return pr.contradiction ? FMB_REFUTED : FMB_OK;
}

fmb_status op_certify_heisenberg(const Json& in, Json& out) {
  RestrictedLieAlgebra L = read_lie(in);
  HeisenbergCertificate cert = certify_heisenberg_type(L);
  out = heisenberg_certificate_to_json(cert);
  // OK means the nonexistence certificate was established
  return cert.refuted ? FMB_OK : FMB_REFUTED;
}

fmb_status op_lie_env(const Json& in, Json& out) {
  Envelope E = build_envelope(read_lie(in));
  out = Json::object();
  out["dim"] = E.algebra.dim();
  out["heights"] = ints_json(E.heights);
  out["adapted"] = basis_to_json(E.input.field, E.input_from_adapted);
  Json omega = Json::array();
  for (int n = 0; n <= E.omega_nilindex(); ++n) omega.push_back(E.omega_power(n).dim());
  out["omega_dims"] = std::move(omega);
  out["algebra"] = algebra_to_json(E.algebra);
  return FMB_OK;
}

fmb_status op_lie_omega(const Json& in, Json& out) {
  Envelope E = build_envelope(read_lie(in));
  const RadicalFiltration& fil = E.algebra.filtration();
  bool match = E.omega_nilindex() == fil.nilindex();
  Json omega = Json::array(), graded = Json::array();
  for (int n = 0; n <= E.omega_nilindex(); ++n) {
    Subspace pw = E.omega_power(n);
    match = match && n <= fil.nilindex() && pw == fil.power(n);
    omega.push_back(pw.dim());
    if (n < E.omega_nilindex()) graded.push_back(pw.dim() - E.omega_power(n + 1).dim());
  }
  out = Json::object();
  out["nilindex"] = E.omega_nilindex();
  out["omega_dims"] = std::move(omega);
  out["graded_dims"] = std::move(graded);
  out["matches_radical"] = match;
  return match ? FMB_OK : FMB_REFUTED;
}

fmb_status op_lie_family(const Json& in, Json& out) {
  ScenarioArgs a = read_scenario_args(in);
  out = lie_to_json(make_family(a.m, a.n, a.s, a.p));
  return FMB_OK;
}

fmb_status op_lie_family_fmb(const Json& in, Json& out) {
  ScenarioArgs a = read_scenario_args(in);
  FamilyBasis fb = family_basis(a.m, a.n, a.s, a.p);
  const Field& F = fb.env.algebra.field();
  FmbVerifyReport rep = verify_fmb(fb.env.algebra, fb.members);
  out = Json::object();
  out["lie"] = lie_to_json(fb.env.input);
  Json names = Json::array();
  for (const std::string& s : fb.word_names) names.push_back(s);
  out["member_names"] = std::move(names);
  out["report"] = verify_report_to_json(F, rep);
  return rep.ok ? FMB_OK : FMB_REFUTED;
}

fmb_status op_lie_word_basis(const Json& in, Json& out) {
  RestrictedLieAlgebra L = read_lie(in);
  Envelope E = build_envelope(L);
  std::vector<Vec> gens;
  for (const Vec& g : read_rows(in, "generators", L.field, L.dim)) gens.push_back(E.embed(g));
  WordImageBasis wb = word_image_basis(E, gens);
  out = word_image_basis_to_json(L.field, wb);
  return wb.spans ? FMB_OK : FMB_REFUTED;
}

fmb_status op_lie_dimsub(const Json& in, Json& out) {
  RestrictedLieAlgebra L = read_lie(in);
  DimensionChain chain = dimension_chain(L);
  out = Json::object();
  Json dims = Json::array();
  for (int m = 1; m <= chain.top() + 1; ++m) dims.push_back(chain.at(m).dim());
  out["dims"] = std::move(dims);
  out["heights"] = ints_json(chain.heights);
  out["adapted"] = basis_to_json(L.field, chain.adapted);
  return FMB_OK;
}

fmb_status op_lie_grlie(const Json& in, Json& out) {
  RestrictedLieAlgebra L = read_lie(in);
  GradedLie gl = graded_lie(L);
  out = Json::object();
  out["graded"] = lie_to_json(gl.lie);
  out["layers"] = ints_json(gl.layer_of);
  out["reps"] = basis_to_json(L.field, gl.reps);
  return FMB_OK;
}

fmb_status op_lie_decompose(const Json& in, Json& out) {
  RestrictedLieAlgebra L = read_lie(in);
  CyclicDecomposition dec = cyclic_decomposition(L);
  out = cyclic_decomposition_to_json(L.field, dec);
  return dec.decomposable ? FMB_OK : FMB_REFUTED;
}

fmb_status op_group_jennings(const Json& in, Json& out) {
  Group G = read_group(in);
  JenningsData J = jennings_lie(G);
  out = Json::object();
  Json chain = Json::array();
  for (const auto& sub : J.chain) chain.push_back(static_cast<int>(sub.size()));
  out["chain_orders"] = std::move(chain);
  Json layers = Json::array();
  for (const JenningsLayer& l : J.layers) {
    Json lj = Json::object();
    lj["depth"] = l.depth;
    Json tv = Json::array();
    for (int g : l.transversal) tv.push_back(G.label(g));
    lj["transversal"] = std::move(tv);
    layers.push_back(std::move(lj));
  }
  out["layers"] = std::move(layers);
  out["lie"] = lie_to_json(J.lie);
  out["layer_of"] = ints_json(J.layer_of);
  return FMB_OK;
}

fmb_status op_group_quillen(const Json& in, Json& out) {
  Group G = read_group(in);
  QuillenReport rep = quillen_check(G, Field::prime(static_cast<uint32_t>(G.p)));
  out = quillen_report_to_json(rep);
  return rep.ok ? FMB_OK : FMB_REFUTED;
}

fmb_status op_group_powerful(const Json& in, Json& out) {
  Group G = read_group(in);
  bool pw = is_powerful(G);
  out = Json::object();
  out["powerful"] = pw;
  out["class"] = group_class(G);
  return pw ? FMB_OK : FMB_REFUTED;
}

fmb_status op_group_corollary2(const Json& in, Json& out) {
  Group G = read_group(in);
  Field F = Field::prime(static_cast<uint32_t>(G.p));
  VerdictOptions opt;
  opt.run_search = json_bool(in, "search", true);
  opt.search = read_search_options(in);
  GroupVerdict v = corollary2_report(G, F, opt);
  out = group_verdict_to_json(F, v);
  return FMB_OK;
}

fmb_status op_convert(const Json& in, Json& out) {
  out = json_convert(json_member(in, "input"), json_string(in, "to"));
  return FMB_OK;
}

fmb_status op_group_bundled(const Json& in, Json& out) {
  out = Json::object();
  if (!in.contains("name")) {
    Json names = Json::array();
    for (const std::string& n : bundled_group_names()) names.push_back(n);
    out["names"] = std::move(names);
    return FMB_OK;
  }
  std::string name = json_string(in, "name");
  out["name"] = name;
  out["group"] = group_to_json(bundled_group(name));
  return FMB_OK;
}

const std::vector<Op>& op_table() {
  static const std::vector<Op> ops = [] {
    std::vector<Op> t = {
        {"fmb/verify", op_verify},
        {"fmb/search", op_search},
        {"fmb/quotient", op_quotient},
        {"fmb/regular-kernel", op_regular_kernel},
        {"fmb/gr-transport", op_gr_transport},
        {"fmb/probe", op_probe},
        {"fmb/certify-heisenberg", op_certify_heisenberg},
        {"lie/env", op_lie_env},
        {"lie/omega", op_lie_omega},
        {"lie/family", op_lie_family},
        {"lie/family-fmb", op_lie_family_fmb},
        {"lie/word-basis", op_lie_word_basis},
        {"lie/dimsub", op_lie_dimsub},
        {"lie/grlie", op_lie_grlie},
        {"lie/decompose", op_lie_decompose},
        {"group/jennings", op_group_jennings},
        {"group/quillen", op_group_quillen},
        {"group/powerful", op_group_powerful},
        {"group/corollary2", op_group_corollary2},
        {"group/bundled", op_group_bundled},
        {"convert", op_convert},
    };
    for (const std::string& name : scenario_names())
      t.push_back({"scenario/" + name, [name](const Json& in, Json& out) {
                     ScenarioResult r = run_scenario(name, read_scenario_args(in));
                     out = std::move(r.report);
                     return r.exit_code == 0 ? FMB_OK : FMB_REFUTED;
                   }});
    return t;
  }();
  return ops;
}

fmb_status run_locked(const char* op, const Json& in, Json& out) {
  if (!op) throw std::invalid_argument("operation name is null");
  for (const Op& entry : op_table())
    if (entry.name == std::string(op)) return entry.fn(in, out);
  throw std::invalid_argument("unknown operation \"" + std::string(op) + "\"");
}

template <typename Fn>
fmb_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FMB_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FMB_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FMB_INTERNAL;
  }
}

}  // namespace

extern "C" {

FMB_EXPORT fmb_status fmb_run_json(const char* op, const char* json_in, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&]() -> fmb_status {
    if (!json_in) throw std::invalid_argument("input document is null");
    Json in = json_parse(json_in);
    Json out;
    fmb_status st = run_locked(op, in, out);
    if (json_out) *json_out = copy_out(canonical_dump(out));
    return st;
  });
}

FMB_EXPORT fmb_status fmb_object_parse(const char* json_text, fmb_object** out) {
  if (out) *out = nullptr;
  return guarded([&]() -> fmb_status {
    if (!out) throw std::invalid_argument("output handle is null");
    if (!json_text) throw std::invalid_argument("input document is null");
    Json doc = json_parse(json_text);
    std::string kind = json_schema_kind(doc);
    // round through the typed representation: validates and canonicalizes
    Json canonical = json_convert(doc, kind);
    *out = new fmb_object{std::move(kind), std::move(canonical)};
    return FMB_OK;
  });
}

FMB_EXPORT const char* fmb_object_kind(const fmb_object* obj) {
  return obj ? obj->kind.c_str() : nullptr;
}

FMB_EXPORT fmb_status fmb_object_dump(const fmb_object* obj, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&]() -> fmb_status {
    if (!obj) throw std::invalid_argument("object handle is null");
    if (!json_out) throw std::invalid_argument("output pointer is null");
    *json_out = copy_out(canonical_dump(obj->doc));
    return FMB_OK;
  });
}

FMB_EXPORT fmb_status fmb_run(const char* op, const fmb_object* obj, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&]() -> fmb_status {
    if (!obj) throw std::invalid_argument("object handle is null");
    Json in = Json::object();
    in[obj->kind] = obj->doc;
    Json out;
    fmb_status st = run_locked(op, in, out);
    if (json_out) *json_out = copy_out(canonical_dump(out));
    return st;
  });
}

FMB_EXPORT void fmb_object_release(fmb_object* obj) { delete obj; }

FMB_EXPORT void fmb_string_release(char* s) { delete[] s; }

FMB_EXPORT const char* fmb_last_error(void) { return g_last_error.c_str(); }

FMB_EXPORT int fmb_op_count(void) { return static_cast<int>(op_table().size()); }

FMB_EXPORT const char* fmb_op_name(int index) {
  const std::vector<Op>& ops = op_table();
  if (index < 0 || index >= static_cast<int>(ops.size())) return nullptr;
  return ops[static_cast<size_t>(index)].name.c_str();
}

FMB_EXPORT const char* fmb_version(void) { return "1.0.0"; }

}  // extern "C"

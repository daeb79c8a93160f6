#pragma once
// JSON encoding of the library's value and report types. Writers emit keys in
// a fixed order and index tuples sorted ascending, so equal values always
// produce byte-identical text. Readers throw std::invalid_argument on any
// schema violation; the CLI maps that to its invalid-input exit code.
//
// Schemas:
//   field      prime p as the integer p; the rational-function field F_p(t)
//              as {"kind":"ratfunc","p":p} (and {"kind":"prime","p":p} is
//              accepted on input)
//   scalar     prime-field values as integers (any representative; reduced);
//              F_p(t) values as {"num":[c0,c1,...],"den":[c0,c1,...]} with
//              coefficient lists little-endian in degree (a bare integer is
//              accepted as a constant)
//   algebra    {"field":..,"dim":n,"labels":[..],"unit":[..],
//               "mult":[[i,j,k,coeff],..],"augmentation":[..]}
//              indices 0-based; missing (i,j) pairs mean the product is zero;
//              "augmentation" is optional for a bare algebra
//   lie        {"field":..,"p":p,"dim":n,"labels":[..],
//               "bracket":[[i,j,k,coeff],..],"pmap":[[i,k,coeff],..]}
//              bracket rows are written with i < j; either orientation is
//              accepted on input and checked for consistency
//   group      {"p":p,"order":N,"table":[[..],..],"labels":[..]},
//              table[a][b] = index of the product, identity at index 0 not
//              required (it is located by inspection)
//   basis      list of coordinate vectors
//   certificate {"members":basis,"table":[[..],..],"depths":[..],
//               "layer_counts":[..]} with -1 in the table meaning product 0

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "fmb/algebra.hpp"
#include "fmb/mbasis.hpp"
#include "fmb/pgroup.hpp"
#include "fmb/rlie.hpp"
#include "fmb/uenv.hpp"

namespace fmb {

using Json = nlohmann::ordered_json;

// ---- plumbing -------------------------------------------------------------

// parse text into a Json value; throws std::invalid_argument on bad JSON
Json json_parse(const std::string& text);

// fixed rendering used for all emitted documents: 2-space indent + newline
std::string canonical_dump(const Json& j);

// FNV-1a 64-bit digest of a byte string, 16 lowercase hex digits
std::string fnv1a64_hex(const std::string& bytes);

// digest of a JSON value (over its compact dump)
std::string json_digest(const Json& j);

// field accessors with schema-violation errors mentioning the key
const Json& json_member(const Json& j, const char* key);
int64_t json_int(const Json& j, const char* key, int64_t lo, int64_t hi,
                 std::optional<int64_t> fallback = std::nullopt);
bool json_bool(const Json& j, const char* key, std::optional<bool> fallback = std::nullopt);
std::string json_string(const Json& j, const char* key, const char* fallback = nullptr);

// ---- scalars and vectors --------------------------------------------------

Json field_to_json(const Field& F);
Field field_from_json(const Json& j);

Json scalar_to_json(const Field& F, const Scalar& a);
Scalar scalar_from_json(const Field& F, const Json& j);

Json vec_to_json(const Field& F, const Vec& v);
// expect_dim < 0 accepts any length
Vec vec_from_json(const Field& F, const Json& j, int expect_dim = -1);

Json basis_to_json(const Field& F, const std::vector<Vec>& rows);
std::vector<Vec> basis_from_json(const Field& F, const Json& j, int expect_dim = -1);

// ---- structures -----------------------------------------------------------

Json algebra_to_json(const Algebra& A);
Json algebra_to_json(const AugmentedAlgebra& A);  // adds "augmentation"
// parses and validates (shape, associativity, unit laws)
Algebra algebra_from_json(const Json& j);
// requires the "augmentation" key; the constructor re-verifies it
AugmentedAlgebra augmented_algebra_from_json(const Json& j);

Json lie_to_json(const RestrictedLieAlgebra& L);
// parses and validates (alternating, Jacobi, restrictedness)
RestrictedLieAlgebra lie_from_json(const Json& j);

Json group_to_json(const Group& G);
// parses and validates the table as a p-group
Group group_from_json(const Json& j);

Json certificate_to_json(const Field& F, const FmbCertificate& c);
FmbCertificate certificate_from_json(const Field& F, const Json& j, int expect_dim = -1);

// ---- report writers (used to inline artifacts into CLI output) ------------

Json verify_report_to_json(const Field& F, const FmbVerifyReport& r);
Json search_outcome_to_json(const Field& F, const SearchOutcome& o);
Json ray_decomposition_to_json(const Field& F, const RayDecomposition& r);
Json probe_report_to_json(const Field& F, const ProbeReport& r);
Json heisenberg_certificate_to_json(const HeisenbergCertificate& c);
Json quillen_report_to_json(const QuillenReport& r);
Json group_verdict_to_json(const Field& F, const GroupVerdict& v);
Json word_image_basis_to_json(const Field& F, const WordImageBasis& w);
Json cyclic_decomposition_to_json(const Field& F, const CyclicDecomposition& d);

// ---- schema detection and conversion --------------------------------------

// "group" | "lie" | "algebra", decided by the keys present
std::string json_schema_kind(const Json& j);

// lossless conversions between schemas: any kind to itself (canonical
// re-serialization), group -> algebra (its group algebra over F_p), and
// lie -> algebra (its restricted enveloping algebra); anything else throws
Json json_convert(const Json& input, const std::string& to);

}  // namespace fmb

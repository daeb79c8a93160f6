#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmb/algebra.hpp"
#include "fmb/rlie.hpp"
#include "fmb/uenv.hpp"

namespace fmb {

// ---- certificates ---------------------------------------------------------

// product table over a finite basis: entry (i, j) holds the index of the
// member equal to b_i * b_j, or -1 when the product is zero
struct ProductTable {
  int n = 0;
  std::vector<int> cell;
  int at(int i, int j) const { return cell[static_cast<size_t>(i) * n + j]; }
};

struct FmbCertificate {
  std::vector<Vec> members;  // coordinates in the ambient algebra
  ProductTable table;
  std::vector<int> depths;        // radical depth per member
  std::vector<int> layer_counts;  // members of depth d, d = 0 .. nilindex-1
};

struct MultiplicativeCheck {
  bool ok = false;
  std::optional<ProductTable> table;
  std::vector<std::string> failures;
};

// checks that every pairwise product is zero or another member (products are
// matched exactly); does not require the members to span
MultiplicativeCheck verify_multiplicative(const Algebra& A, const std::vector<Vec>& members);

struct FmbVerifyReport {
  bool ok = false;
  std::optional<FmbCertificate> cert;
  std::vector<std::string> failures;
};

// full filtered check: members form a vector-space basis, are product-closed,
// meet each radical power in exactly dim R^n / R^{n+1} members of depth n, and
// stay pairwise distinct modulo every radical power they avoid
FmbVerifyReport verify_fmb(const AugmentedAlgebra& A, const std::vector<Vec>& members);

// ---- rays of a basis along an ideal ---------------------------------------

// given a product-closed basis and an ideal K, sort the members by how they
// meet K: i0 = members inside K; i1 = members congruent to a later member mod
// K (partner = first such); i3 = everything else minus the partners. The
// collected differences always form an independent set inside K; K is called
// regular for the basis when they span it.
struct RayDecomposition {
  std::vector<int> i0;
  std::vector<int> i1;
  std::vector<int> partner;        // aligned with i1
  std::vector<int> i3;
  std::vector<Vec> kernel_members; // the independent set inside K
  bool regular = false;
  std::optional<Vec> witness;      // element of K outside the span when not regular
};

RayDecomposition ray_decomposition(const AugmentedAlgebra& A, const std::vector<Vec>& members,
                                   const Subspace& K);

// projects the surviving members onto A/K and verifies the image as a
// filtered multiplicative basis of the quotient; requires a regular ideal
struct QuotientBasisResult {
  RayDecomposition rays;
  QuotientResult quotient;
  FmbVerifyReport report;  // verification of the projected members in A/K
};

QuotientBasisResult quotient_fmb(const AugmentedAlgebra& A, const std::vector<Vec>& members,
                                 const Subspace& K);

// ---- transport to the associated graded algebra ---------------------------

// sends a member of depth d to its image in layer d of gr(A) and verifies the
// result as a filtered multiplicative basis there
struct GradedTransportResult {
  std::vector<Vec> graded_members;
  FmbVerifyReport report;
};

GradedTransportResult transport_fmb_to_gr(const AugmentedAlgebra& A, const GradedAlgebra& G,
                                          const std::vector<Vec>& members);

// ---- obstruction probe ----------------------------------------------------

// evaluates the six permuted products r_a r_b r_c of three depth-1 elements
// modulo the fourth radical power. If the three elements belonged to a
// filtered multiplicative basis, every product would be a member or zero and
// distinct nonzero products of depth three would stay independent modulo the
// fourth power -- so the value counts bound what any such basis could do.
// The report is evidence about the given representatives, never a
// nonexistence proof by itself.
struct ProbeFact {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ProbeReport {
  std::vector<std::vector<int>> orderings;  // the six permutations
  std::vector<Vec> products;                // full values in A
  std::vector<Vec> images;                  // representatives reduced mod R^4
  int span_dim = 0;                         // rank of the images
  int distinct_nonzero = 0;                 // pairwise distinct nonzero products
  std::vector<std::vector<int>> collision_groups;  // orderings sharing a value
  std::vector<ProbeFact> facts;
  bool contradiction = false;  // value count exceeds independence capacity
  std::string statement;
};

ProbeReport obstruction_probe(const AugmentedAlgebra& A, const std::vector<Vec>& reps);

// ---- rigidity certificate for two-generator class-two algebras ------------

// For a p-nilpotent restricted Lie algebra of class two whose first chain
// layer is two-dimensional, any filtered multiplicative basis of u(L) would
// include two depth-one members, and the values of their pair and triple
// products modulo the third and fourth omega powers depend only on the
// depth-one images of those members. Enumerating every image pair therefore
// decides existence: if each pair forces either too few product values to
// supply the required layer members or more distinct values than can stay
// independent, no filtered multiplicative basis exists.
struct HeisenbergStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct HeisenbergCertificate {
  std::vector<HeisenbergStage> stages;
  // pairs surviving both product checks; empty + complete => nonexistence
  uint64_t pairs_checked = 0;
  uint64_t pairs_surviving = 0;
  bool applicable = false;  // all structural stages passed
  bool refuted = false;     // applicable, enumeration complete, no survivors
  std::string verdict;
};

HeisenbergCertificate certify_heisenberg_type(const RestrictedLieAlgebra& L);

// ---- closure search -------------------------------------------------------

struct SearchOptions {
  uint64_t budget = 200000;  // max candidates: exhaustive if the space fits
  uint64_t seed = 0x2545F4914F6CDD1DULL;
  bool rescale_canonical = true;  // normalize the leading layer coordinate
};

enum class SearchStatus { found, none_exhaustive, none_budget };

struct SearchOutcome {
  SearchStatus status = SearchStatus::none_budget;
  std::optional<FmbCertificate> cert;
  std::vector<Vec> generators;  // depth-1 generators behind the certificate
  uint64_t candidates_tried = 0;
  bool exhaustive = false;
};

// searches for a filtered multiplicative basis of a local augmented algebra:
// every such basis is the unit together with the product closure of its
// depth-1 members, so candidates are tuples of depth-1 elements, enumerated
// exhaustively when the candidate space fits the budget and sampled at random
// otherwise
SearchOutcome closure_search_fmb(const AugmentedAlgebra& A, const SearchOptions& opt);

}  // namespace fmb

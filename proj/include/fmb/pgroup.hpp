#pragma once
// Finite p-groups given by Cayley tables: dimension subgroup chains, the
// restricted Lie algebra carried by the chain layers, modular group algebras,
// and the comparison of gr(FG) with the restricted envelope of that algebra.

#include <map>
#include <optional>

#include "fmb/mbasis.hpp"

namespace fmb {

struct Group {
  int order = 0;
  std::vector<int> table;  // table[a*order + b] = index of a*b
  std::vector<std::string> labels;
  int identity = 0;
  int p = 0;  // the order is a power of this prime

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
  int inv(int a) const;
  int pow(int a, int e) const;         // e >= 0
  int commutator(int a, int b) const;  // a^{-1} b^{-1} a b
  std::string label(int i) const;
};

// table shape, latin square, associativity, identity, inverses, prime-power order
std::vector<ValidationIssue> validate_group(const Group& G);

// fills identity and p from the table and validates; throws on any problem
Group group_from_table(int order, std::vector<int> table,
                       std::vector<std::string> labels = {});

// ---- bundled groups --------------------------------------------------------

Group make_cyclic_group(uint32_t p, int k);  // order p^k
Group make_dihedral8();                      // r, s with r^4 = s^2 = (rs)^2 = 1
Group make_quaternion8();                    // a, b with b^2 = a^2, bab^{-1} = a^{-1}
Group make_modular16();                      // r, s with r^8 = s^2 = 1, srs = r^5
// order 27, class 2: exponent 3 (upper unitriangular shape) or exponent 9
Group make_extraspecial27(bool exponent_three);
Group direct_product(const Group& A, const Group& B);

// catalog of the groups above under short lowercase names ("c2", "c4",
// "c2c2", "d8", "q8", "m16", "e27x3", "e27x9", "d8c2"); unknown names throw
std::vector<std::string> bundled_group_names();
Group bundled_group(const std::string& name);

// ---- subgroups (always sorted element-index vectors) -----------------------

std::vector<int> subgroup_closure(const Group& G, const std::vector<int>& gens);
// gamma_1 = G down to and including the trivial subgroup
std::vector<std::vector<int>> lower_central_series_group(const Group& G);
int group_class(const Group& G);
// subgroup generated by the k-th powers of the elements of H
std::vector<int> power_subgroup(const Group& G, const std::vector<int>& H, int k);

// D_1 = G >= D_2 >= ... >= {1} (last entry trivial), where D_n is generated by
// the p^j-th powers of the lower central terms gamma_i over all i p^j >= n
std::vector<std::vector<int>> dimension_series(const Group& G);
// the same chain read off inside the group algebra: D_n = {g : g - 1 in omega^n}
std::vector<std::vector<int>> dimension_series_in_algebra(const Group& G, const Field& F);

// ---- the restricted Lie algebra on the chain layers ------------------------

struct JenningsLayer {
  int depth = 1;
  std::vector<int> transversal;  // classes form a basis of D_depth/D_{depth+1}
};

struct JenningsData {
  std::vector<std::vector<int>> chain;
  std::vector<JenningsLayer> layers;  // depth ascending; rank-zero layers kept
  RestrictedLieAlgebra lie;           // over F_p, basis = transversal classes
  std::vector<int> layer_of;          // chain depth per Lie basis vector
  std::vector<int> rep_of;            // group element per Lie basis vector

  // coordinates of the class of a chain element at the given depth, over the
  // full Lie basis (slots of other layers stay zero); zero past the chain
  Vec class_coords(int elem, int depth) const;

  std::map<int, std::map<int, std::vector<int>>> layer_coords;  // depth -> element -> exponents
  std::vector<int> slot_start;  // first Lie basis slot of each depth
};

// The bracket of a depth-i class and a depth-j class is the class of the group
// commutator at depth i+j; the p-th power of a depth-i class is the class of
// the group p-th power at depth p*i. element_order, when given, is a
// permutation of the elements steering which representatives the greedy
// transversal picks; the structure constants must not depend on that choice.
JenningsData jennings_lie(const Group& G, const std::vector<int>* element_order = nullptr);

// FG: basis = group elements, products from the table, eps(g) = 1 for every g
AugmentedAlgebra group_algebra(const Group& G, const Field& F);

// ---- gr(FG) versus the restricted envelope ---------------------------------

struct QuillenReport {
  bool ok = false;
  int dim = 0;
  std::vector<int> graded_dims_group;  // layer dims of gr(FG)
  std::vector<int> graded_dims_env;    // radical layer dims of the envelope
  std::vector<std::string> failures;
};

// sends each depth-n transversal class to the class of g - 1 in layer n,
// extends over the monomial basis of the envelope, and checks that the
// extension is a linear bijection and multiplicative on every basis pair
QuillenReport quillen_check(const Group& G, const Field& F);

// commutator subgroup inside the p-th power subgroup (fourth powers when p = 2)
bool is_powerful(const Group& G);

// ---- existence report ------------------------------------------------------

struct VerdictOptions {
  bool run_search = true;  // search FG for a basis when no citation applies
  SearchOptions search;
};

struct GroupVerdict {
  int group_class = 0;
  bool powerful = false;
  int lie_class = 0;
  int lie_generators = 0;  // rank of the first chain layer
  bool no_fmb = false;     // the cited result rules a basis out
  std::string branch;      // "powerful", "lie-class-2", or "none"
  std::string verdict;
  std::optional<ProbeReport> probe;     // run when the Lie class is 2 with >= 3 generators
  std::optional<SearchOutcome> search;  // run when nothing was ruled out
};

// For an odd prime and a class-2 group the group algebra has no filtered
// multiplicative basis; the verdict cites that result and names which branch
// applies (abelian layer algebra forces the group powerful; otherwise the
// layer algebra itself has class 2). Everything found by computation is
// labeled "computed" and never upgraded to a nonexistence claim.
GroupVerdict corollary2_report(const Group& G, const Field& F,
                               const VerdictOptions& opt = {});

}  // namespace fmb

#pragma once
// Restricted enveloping algebras via PBW monomial bases. The basis is adapted
// to the dimension chain of L, so monomial heights read the omega-filtration
// directly: omega^n is spanned by the monomials of height >= n.

#include <map>
#include <vector>

#include "fmb/rlie.hpp"

namespace fmb {

struct Envelope {
  RestrictedLieAlgebra input;    // as given
  RestrictedLieAlgebra adapted;  // same algebra in the chain-adapted basis
  DimensionChain chain;          // input coordinates
  std::vector<Vec> adapted_from_input;  // rows: input basis in adapted coordinates
  std::vector<Vec> input_from_adapted;  // rows: adapted basis in input coordinates
  std::vector<int> heights;             // per adapted basis vector

  AugmentedAlgebra algebra;                     // dim p^dim(L)
  std::vector<std::vector<uint8_t>> monomials;  // exponents in the adapted basis
  std::vector<int> mono_height;
  std::vector<int> ordinal_to_index;  // mixed-radix exponent ordinal -> basis index

  int mono_index(const std::vector<uint8_t>& exps) const;
  // L -> u(L), input coordinates to algebra coordinates
  Vec embed(const Vec& lie_elem) const;
  // coordinates of an algebra element that lies in the degree <= 1 span:
  // returns (constant term, lie part in input coordinates)
  std::pair<Scalar, Vec> restrict_to_lie(const Vec& v) const;
  // p-th power of a general element of L, input coordinates
  Vec pmap_eval(const Vec& lie_elem) const;
  // span of monomials of height >= n
  Subspace omega_power(int n) const;
  int omega_nilindex() const;  // least n with omega^n = 0
};

// builds u(L); throws if L is not restricted or not p-nilpotent, or if
// p^dim(L) exceeds the supported size
Envelope build_envelope(const RestrictedLieAlgebra& L);

// ---- bundled families -----------------------------------------------------

// nilcyclic: basis x1..xs, zero bracket, x_i^{[p]} = x_{i+1}
RestrictedLieAlgebra make_nilcyclic(const Field& F, int s);
// characteristic 2 only, dim 3s: chains x_a, y_a, z_a (a = 0..s-1) with the
// single bracket [x_0, y_0] = z_0 and the p-map shifting each chain
RestrictedLieAlgebra make_heisenberg_chain(int s);
// class-2 Heisenberg: [x, y] = z, trivial p-map
RestrictedLieAlgebra make_heisenberg3(const Field& F);
// m nilcyclic and n chain-Heisenberg summands, all of parameter s
RestrictedLieAlgebra make_family(int m, int n, int s, uint32_t p);
// abelian dim 3: x^{[p]} = alpha z, y^{[p]} = z, z^{[p]} = 0
RestrictedLieAlgebra make_alpha_family(const Field& F, const Scalar& alpha);

// ---- word-image bases -----------------------------------------------------

struct CollisionGroup {
  int member;                           // index into members
  std::vector<std::vector<int>> words;  // all words sharing that value
};

struct WordImageBasis {
  std::vector<Vec> members;             // distinct nonzero word values, unit first
  std::vector<std::vector<int>> words;  // first generator word behind each member
  std::vector<CollisionGroup> collisions;
  bool spans;  // members form a basis of u
};

// BFS over words in the given generators (length-lex), values deduplicated;
// lengths run to the nilpotency index of omega, so multiplicative closure of
// the value set is automatic
WordImageBasis word_image_basis(const Envelope& env, const std::vector<Vec>& gens);

struct FamilyBasis {
  Envelope env;
  std::vector<Vec> members;             // per-block word values multiplied together
  std::vector<std::string> word_names;  // readable description per member
};

// the standard basis of u(L(m,n;s)): product over blocks of each block's
// word-image basis
FamilyBasis family_basis(int m, int n, int s, uint32_t p);

// ---- graded comparison ----------------------------------------------------

// Compares gr(u(L)) with u(gr(L)) through the canonical generator map: a
// layer-i basis vector of gr(L) goes to the layer-i image of its
// representative, extended multiplicatively over the PBW monomials of
// u(gr(L)). Verifies the extension is bijective and multiplicative on all
// basis pairs and that the graded dimension vectors of both sides agree.
struct GradedEnvelopeReport {
  bool ok = false;
  int dim = 0;                          // common dimension p^{dim L}
  std::vector<int> graded_dims_base;    // layers of gr(u(L))
  std::vector<int> graded_dims_env;     // omega layers of u(gr(L))
  std::vector<std::string> failures;
};

GradedEnvelopeReport graded_envelope_check(const RestrictedLieAlgebra& L);

}  // namespace fmb

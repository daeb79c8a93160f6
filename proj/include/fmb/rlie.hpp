#pragma once
// Restricted Lie algebras over F_p / F_p(t) given by a bracket table and the
// p-map on a basis. Everything is p-nilpotent in this codebase; constructions
// that need powers of general elements evaluate them inside the enveloping
// algebra (see uenv.hpp).

#include <optional>
#include <string>
#include <vector>

#include "fmb/algebra.hpp"

namespace fmb {

struct RestrictedLieAlgebra {
  Field field;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Vec> bracket_table;  // dim*dim entries, [e_i, e_j] dense
  std::vector<Vec> pmap;           // pmap[i] = e_i^{[p]}

  const Vec& bracket_basis(int i, int j) const {
    return bracket_table[static_cast<size_t>(i) * dim + j];
  }
  void set_bracket(int i, int j, const Vec& v);  // also stores -v at (j,i)
  Vec bracket(const Vec& a, const Vec& b) const;
  std::string label(int i) const;
};

// alternating + Jacobi + ad(e_i^{[p]}) = ad(e_i)^p on the basis
std::vector<ValidationIssue> validate_restricted(const RestrictedLieAlgebra& L);

struct LieSeries {
  std::vector<Subspace> lower_central;  // gamma_1 = L, gamma_{i+1} = [gamma_i, L], until zero
  Subspace derived;                     // [L, L]
  Subspace center;
  int nilpotency_class;  // least c with gamma_{c+1} = 0
  bool abelian;
};
LieSeries lie_series(const RestrictedLieAlgebra& L);

struct DimensionChain {
  // d[0] unused, d[m] for m = 1..M+1 with d[M+1] = 0 (input coordinates)
  std::vector<Subspace> d;
  std::vector<Vec> adapted;   // basis adapted to the chain, height-ascending
  std::vector<int> heights;   // heights[k] = max m with adapted[k] in d[m]
  int top() const { return static_cast<int>(d.size()) - 2; }
  const Subspace& at(int m) const {
    size_t i = static_cast<size_t>(m);
    return i < d.size() ? d[i] : d.back();
  }
};

// D_m(L) = sum of spans of p^j-th powers of the lower central terms gamma_i
// over all i p^j >= m; built from exact power spans, so plateaus in the chain
// are handled correctly
DimensionChain dimension_chain(const RestrictedLieAlgebra& L);

struct GradedLie {
  RestrictedLieAlgebra lie;   // basis = adapted representatives
  std::vector<int> layer_of;  // layer (= height) per basis vector
  std::vector<Vec> reps;      // representative in the source, input coordinates
};

// graded restricted Lie algebra of the dimension chain: brackets add layers,
// the p-map multiplies them by p
GradedLie graded_lie(const RestrictedLieAlgebra& L);

struct CyclicSummand {
  int length;            // summand is spanned by g, g^{[p]}, ..., g^{[p]^{length-1}}
  std::vector<Vec> chain;
};

struct CyclicDecomposition {
  bool decomposable;
  std::vector<CyclicSummand> summands;   // when decomposable, lengths descending
  std::string obstruction;               // otherwise: why not
  std::optional<Scalar> non_power_witness;  // coefficient that is not a p-th power
};

// abelian restricted Lie algebras only. Over a prime field the p-map is
// linear, so this is a nilpotent Jordan decomposition; over F_p(t) the p-map
// is Frobenius-semilinear and only rank <= 1 maps are classified (that covers
// the three-dimensional family with x^{[p]} = a z, y^{[p]} = z, z^{[p]} = 0,
// where decomposability is exactly "a is a p-th power").
CyclicDecomposition cyclic_decomposition(const RestrictedLieAlgebra& L);

RestrictedLieAlgebra lie_change_basis(const RestrictedLieAlgebra& L,
                                      const std::vector<Vec>& new_basis,
                                      const std::vector<Vec>& pmap_on_new_basis,
                                      const std::vector<std::string>& new_labels);

RestrictedLieAlgebra lie_direct_sum(const RestrictedLieAlgebra& A,
                                    const RestrictedLieAlgebra& B);

}  // namespace fmb

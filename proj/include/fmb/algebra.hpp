#pragma once
// Finite-dimensional associative algebras given by structure constants, with
// an augmentation whose kernel is the (nilpotent) Jacobson radical. That is
// the setting everything downstream works in: local augmented algebras.

#include <string>
#include <vector>

#include "fmb/linalg.hpp"

namespace fmb {

struct Algebra {
  Field field;
  int dim = 0;
  std::vector<std::string> labels;
  // mult[i*dim+j] lists (k, c): e_i e_j = sum c e_k. Missing entries are zero.
  std::vector<std::vector<std::pair<int, Scalar>>> mult;
  Vec unit;

  const std::vector<std::pair<int, Scalar>>& table(int i, int j) const {
    return mult[static_cast<size_t>(i) * dim + j];
  }
  void set_table(int i, int j, std::vector<std::pair<int, Scalar>> terms) {
    mult[static_cast<size_t>(i) * dim + j] = std::move(terms);
  }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec basis_product(int i, int j) const;
  Vec e(int i) const { return unit_vec(field, dim, i); }
  std::string label(int i) const;
};

struct ValidationIssue {
  std::string what;  // human-readable; empty list means valid
};

// checks shape, associativity on all basis triples, and both unit laws
std::vector<ValidationIssue> validate_algebra(const Algebra& A);

struct RadicalFiltration {
  // powers[n] = R^n for n = 0..c with R^0 the whole space and R^c = 0
  std::vector<Subspace> powers;
  int nilindex() const { return static_cast<int>(powers.size()) - 1; }
  int dim_power(int n) const {
    if (n < 0) throw std::invalid_argument("negative filtration index");
    size_t i = static_cast<size_t>(n);
    return i < powers.size() ? powers[i].dim() : 0;
  }
  const Subspace& power(int n) const {
    size_t i = static_cast<size_t>(n);
    return i < powers.size() ? powers[i] : powers.back();
  }
  // largest n with v in R^n (capped at nilindex for v = 0)
  int depth(const Field& F, const Vec& v) const;
};

class AugmentedAlgebra {
 public:
  // eps: coordinates of the augmentation functional. Verifies that eps is an
  // algebra map onto the field and that ker(eps) is nilpotent; computes the
  // radical filtration once.
  AugmentedAlgebra(Algebra alg, Vec eps);

  const Algebra& alg() const { return alg_; }
  const Field& field() const { return alg_.field; }
  int dim() const { return alg_.dim; }
  const Vec& eps() const { return eps_; }
  Scalar eps_of(const Vec& v) const;
  const RadicalFiltration& filtration() const { return fil_; }
  const Subspace& radical() const { return fil_.powers[1]; }
  int depth(const Vec& v) const { return fil_.depth(alg_.field, v); }

 private:
  Algebra alg_;
  Vec eps_;
  RadicalFiltration fil_;
};

// standalone filtration of a given nilpotent ideal (basis rows); throws if the
// chain does not reach zero
RadicalFiltration filter_nilpotent_ideal(const Algebra& A, const Subspace& ideal);

struct QuotientResult {
  AugmentedAlgebra algebra;
  // projection of an element of the source onto quotient coordinates
  std::vector<Vec> proj_rows;  // dim(source) rows of length dim(quotient)
  std::vector<Vec> section;    // representative in source per quotient basis vector
  Vec project(const Field& F, const Vec& v) const;
};

// verifies J is a two-sided ideal inside the augmentation ideal, then forms
// A/J with basis = complement of J picked from the standard basis in order
QuotientResult quotient_algebra(const AugmentedAlgebra& A, const Subspace& J);

// tensor product A (x) B with basis e_i (x) f_j ordered by i*dimB + j
AugmentedAlgebra tensor_algebra(const AugmentedAlgebra& A, const AugmentedAlgebra& B);

struct GradedAlgebra {
  AugmentedAlgebra algebra;                // gr(A) with its own structure constants
  std::vector<int> layer_dims;             // layer_dims[i] = dim R^i/R^{i+1}
  std::vector<int> layer_offset;           // start of layer i in the graded basis
  std::vector<Vec> reps;                   // representative in A per graded basis vector
  std::vector<int> layer_of;               // layer of each graded basis vector
  // image of v (element of A, lying in R^i) in layer i of the graded algebra,
  // as full graded coordinates
  Vec project_layer(const Field& F, const Vec& v, int layer) const;

  std::vector<std::vector<Vec>> layer_coord_rows;  // per layer: dim(A) -> layer coords
};

GradedAlgebra associated_graded(const AugmentedAlgebra& A);

}  // namespace fmb

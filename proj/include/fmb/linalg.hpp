#pragma once
// Dense exact linear algebra over Field. Subspaces are kept in reduced
// row-echelon form with increasing pivot columns, so equal subspaces have
// identical representations and all downstream output is deterministic.

#include <optional>
#include <vector>

#include "fmb/field.hpp"

namespace fmb {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& F, int n);
Vec unit_vec(const Field& F, int n, int i);
bool is_zero_vec(const Field& F, const Vec& v);
Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Scalar& c, const Vec& a);
// a += c*b
void vec_axpy(const Field& F, Vec& a, const Scalar& c, const Vec& b);
uint64_t vec_hash(const Vec& v);

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const Field& F, int ambient) : field_(F), ambient_(ambient) {}
  // rows: any spanning set; reduced to canonical RREF
  Subspace(const Field& F, int ambient, const std::vector<Vec>& rows);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Field& field() const { return field_; }

  // residual of v after eliminating along the echelon rows
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // inserts v if independent; returns true when the dimension grew
  bool insert(const Vec& v);
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  void renormalize();
  Field field_;
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// representatives of a basis of outer/inner, chosen greedily from `pool` in
// order (pool defaults to the standard basis); inner must lie inside outer
std::vector<Vec> quotient_reps(const Subspace& outer, const Subspace& inner,
                               const std::vector<Vec>* pool = nullptr);

// Solves coordinates with respect to a fixed (not necessarily echelon) list of
// vectors. Built once, queried many times.
class CoordinateSolver {
 public:
  CoordinateSolver(const Field& F, int ambient, const std::vector<Vec>& basis);
  int ambient() const { return ambient_; }
  // coefficients c with sum_i c_i basis_i = v, if v lies in the span
  std::optional<Vec> coords(const Vec& v) const;
  bool independent() const { return independent_; }

 private:
  Field field_;
  int ambient_;
  size_t nbasis_;
  bool independent_;
  std::vector<Vec> rows_;    // echelon rows over the augmented space [v | c]
  std::vector<int> pivots_;  // pivot columns (< ambient for spanning part)
};

// Right null space of the matrix whose rows are `rows` (vectors of length n):
// all v with rows * v = 0... transposed convention: returns a basis of
// { x in F^n : sum_j rows[i][j] x_j = 0 for all i }.
Subspace null_space(const Field& F, int n, const std::vector<Vec>& rows);

}  // namespace fmb

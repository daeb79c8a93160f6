#include "fmb/linalg.hpp"

#include <algorithm>

namespace fmb {

Vec zero_vec(const Field& F, int n) { return Vec(n, F.zero()); }

Vec unit_vec(const Field& F, int n, int i) {
  Vec v = zero_vec(F, n);
  v[i] = F.one();
  return v;
}

bool is_zero_vec(const Field& F, const Vec& v) {
  for (const Scalar& c : v)
    if (!F.is_zero(c)) return false;
  return true;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& F, const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

void vec_axpy(const Field& F, Vec& a, const Scalar& c, const Vec& b) {
  if (F.is_zero(c)) return;
  for (size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], F.mul(c, b[i]));
}

uint64_t vec_hash(const Vec& v) {
  uint64_t h = 14695981039346656037ull;
  for (const Scalar& c : v) {
    h ^= scalar_hash(c);
    h *= 1099511628211ull;
  }
  return h;
}

Subspace::Subspace(const Field& F, int ambient, const std::vector<Vec>& rows)
    : field_(F), ambient_(ambient) {
  for (const Vec& r : rows) insert(r);
}

Vec Subspace::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (!field_.is_zero(c)) vec_axpy(field_, v, field_.neg(c), rows_[k]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(field_, reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::insert(const Vec& v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  Vec r = reduce(v);
  int piv = -1;
  for (int i = 0; i < ambient_; ++i)
    if (!field_.is_zero(r[i])) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  Scalar lead_inv = field_.inv(r[piv]);
  r = vec_scale(field_, lead_inv, r);
  // keep pivot columns increasing and clear the new pivot from earlier rows
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, piv);
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (k == pos) continue;
    const Scalar& c = rows_[k][piv];
    if (!field_.is_zero(c)) {
      Scalar nc = field_.neg(c);
      vec_axpy(field_, rows_[k], nc, rows_[pos]);
    }
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  Subspace r = a;
  for (const Vec& v : b.rows()) r.insert(v);
  return r;
}

// Zassenhaus: echelonize rows (u | u) for u in a and (v | 0) for v in b; rows
// whose left half vanished carry a basis of the intersection in the right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  const Field& F = a.field();
  int n = a.ambient();
  Subspace work(F, 2 * n);
  for (const Vec& u : a.rows()) {
    Vec w(2 * n, F.zero());
    for (int i = 0; i < n; ++i) w[i] = w[n + i] = u[i];
    work.insert(w);
  }
  for (const Vec& v : b.rows()) {
    Vec w(2 * n, F.zero());
    for (int i = 0; i < n; ++i) w[i] = v[i];
    work.insert(w);
  }
  Subspace out(F, n);
  for (size_t k = 0; k < work.rows().size(); ++k) {
    if (work.pivots()[k] < n) continue;
    Vec tail(work.rows()[k].begin() + n, work.rows()[k].end());
    out.insert(tail);
  }
  return out;
}

std::vector<Vec> quotient_reps(const Subspace& outer, const Subspace& inner,
                               const std::vector<Vec>* pool) {
  if (!outer.contains(inner))
    throw std::invalid_argument("quotient_reps: inner subspace not contained in outer");
  Subspace acc = inner;
  std::vector<Vec> reps;
  auto try_vec = [&](const Vec& v) {
    if (!outer.contains(v)) return;
    if (acc.insert(v)) reps.push_back(v);
  };
  if (pool) {
    for (const Vec& v : *pool) try_vec(v);
  } else {
    for (const Vec& v : outer.rows()) try_vec(v);
  }
  if (acc.dim() != outer.dim())
    throw std::invalid_argument("quotient_reps: pool does not cover the quotient");
  return reps;
}

CoordinateSolver::CoordinateSolver(const Field& F, int ambient, const std::vector<Vec>& basis)
    : field_(F), ambient_(ambient), nbasis_(basis.size()), independent_(true) {
  int width = ambient + static_cast<int>(basis.size());
  Subspace work(F, width);
  for (size_t i = 0; i < basis.size(); ++i) {
    Vec w(width, F.zero());
    for (int j = 0; j < ambient; ++j) w[j] = basis[i][j];
    w[ambient + static_cast<int>(i)] = F.one();
    if (!work.insert(w)) independent_ = false;
    // a dependent input row cannot fail to insert: its tracking column is
    // fresh, so insertion always succeeds with pivot >= ambient
  }
  rows_ = work.rows();
  pivots_ = work.pivots();
}

std::optional<Vec> CoordinateSolver::coords(const Vec& v) const {
  int width = ambient_ + static_cast<int>(nbasis_);
  Vec w(width, field_.zero());
  for (int j = 0; j < ambient_; ++j) w[j] = v[j];
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (pivots_[k] >= ambient_) break;
    const Scalar& c = w[pivots_[k]];
    if (!field_.is_zero(c)) vec_axpy(field_, w, field_.neg(c), rows_[k]);
  }
  for (int j = 0; j < ambient_; ++j)
    if (!field_.is_zero(w[j])) return std::nullopt;
  Vec c(nbasis_, field_.zero());
  for (size_t i = 0; i < nbasis_; ++i) c[i] = field_.neg(w[ambient_ + i]);
  return c;
}

Subspace null_space(const Field& F, int n, const std::vector<Vec>& rows) {
  Subspace row_space(F, n, rows);
  std::vector<char> is_pivot(n, 0);
  for (int piv : row_space.pivots()) is_pivot[piv] = 1;
  Subspace out(F, n);
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(F, n);
    v[j] = F.one();
    for (size_t k = 0; k < row_space.rows().size(); ++k)
      v[row_space.pivots()[k]] = F.neg(row_space.rows()[k][j]);
    out.insert(v);
  }
  return out;
}

}  // namespace fmb

#include "fmb/algebra.hpp"

#include <sstream>

namespace fmb {

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero_vec(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (field.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (field.is_zero(b[j])) continue;
      Scalar ab = field.mul(a[i], b[j]);
      for (const auto& [k, c] : table(i, j)) r[k] = field.add(r[k], field.mul(ab, c));
    }
  }
  return r;
}

Vec Algebra::basis_product(int i, int j) const {
  Vec r = zero_vec(field, dim);
  for (const auto& [k, c] : table(i, j)) r[k] = field.add(r[k], c);
  return r;
}

std::string Algebra::label(int i) const {
  if (i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
  return "e" + std::to_string(i);
}

std::vector<ValidationIssue> validate_algebra(const Algebra& A) {
  std::vector<ValidationIssue> issues;
  auto flag = [&issues](std::string s) { issues.push_back({std::move(s)}); };
  if (A.dim <= 0) {
    flag("dimension must be positive");
    return issues;
  }
  if (A.mult.size() != static_cast<size_t>(A.dim) * A.dim) {
    flag("structure constant table has wrong shape");
    return issues;
  }
  if (static_cast<int>(A.unit.size()) != A.dim) {
    flag("unit vector has wrong length");
    return issues;
  }
  for (size_t cell = 0; cell < A.mult.size(); ++cell)
    for (const auto& [k, c] : A.mult[cell]) {
      (void)c;
      if (k < 0 || k >= A.dim) {
        flag("structure constant index out of range");
        return issues;
      }
    }
  // unit laws
  for (int i = 0; i < A.dim; ++i) {
    Vec ei = A.e(i);
    if (A.mul(A.unit, ei) != ei || A.mul(ei, A.unit) != ei) {
      flag("unit law fails at basis vector " + A.label(i));
      break;
    }
  }
  // associativity on basis triples
  for (int i = 0; i < A.dim && issues.empty(); ++i)
    for (int j = 0; j < A.dim && issues.empty(); ++j) {
      Vec eij = A.basis_product(i, j);
      for (int k = 0; k < A.dim; ++k) {
        Vec lhs = A.mul(eij, A.e(k));
        Vec rhs = A.mul(A.e(i), A.basis_product(j, k));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at (" << A.label(i) << "," << A.label(j) << ","
             << A.label(k) << ")";
          flag(os.str());
          break;
        }
      }
    }
  return issues;
}

int RadicalFiltration::depth(const Field& F, const Vec& v) const {
  int n = 0;
  while (n + 1 < static_cast<int>(powers.size()) && powers[n + 1].contains(v)) ++n;
  if (n + 1 == static_cast<int>(powers.size()) && is_zero_vec(F, v)) return n + 1;
  return n;
}

namespace {
RadicalFiltration filtration_from(const Algebra& A, Subspace first) {
  RadicalFiltration fil;
  Subspace full(A.field, A.dim);
  for (int i = 0; i < A.dim; ++i) full.insert(unit_vec(A.field, A.dim, i));
  fil.powers.push_back(std::move(full));
  fil.powers.push_back(first);
  while (fil.powers.back().dim() > 0) {
    const Subspace& prev = fil.powers.back();
    Subspace next(A.field, A.dim);
    for (const Vec& r : prev.rows())
      for (const Vec& g : fil.powers[1].rows()) next.insert(A.mul(r, g));
    if (next.dim() >= prev.dim())
      throw std::invalid_argument("ideal is not nilpotent: power chain stalls at dimension " +
                                  std::to_string(prev.dim()));
    fil.powers.push_back(std::move(next));
  }
  return fil;
}
}  // namespace

RadicalFiltration filter_nilpotent_ideal(const Algebra& A, const Subspace& ideal) {
  return filtration_from(A, ideal);
}

AugmentedAlgebra::AugmentedAlgebra(Algebra alg, Vec eps) : alg_(std::move(alg)), eps_(std::move(eps)) {
  const Field& F = alg_.field;
  if (static_cast<int>(eps_.size()) != alg_.dim)
    throw std::invalid_argument("augmentation has wrong length");
  auto eps_at = [&](const Vec& v) {
    Scalar s = F.zero();
    for (int i = 0; i < alg_.dim; ++i) s = F.add(s, F.mul(eps_[i], v[i]));
    return s;
  };
  if (!F.is_one(eps_at(alg_.unit)))
    throw std::invalid_argument("augmentation does not send the unit to 1");
  for (int i = 0; i < alg_.dim; ++i)
    for (int j = 0; j < alg_.dim; ++j) {
      Scalar lhs = eps_at(alg_.basis_product(i, j));
      Scalar rhs = F.mul(eps_[i], eps_[j]);
      if (lhs != rhs)
        throw std::invalid_argument("augmentation is not multiplicative at pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // kernel of eps
  Subspace ker = null_space(F, alg_.dim, {eps_});
  fil_ = filtration_from(alg_, ker);
}

Scalar AugmentedAlgebra::eps_of(const Vec& v) const {
  const Field& F = alg_.field;
  Scalar s = F.zero();
  for (int i = 0; i < alg_.dim; ++i) s = F.add(s, F.mul(eps_[i], v[i]));
  return s;
}

Vec QuotientResult::project(const Field& F, const Vec& v) const {
  Vec r = zero_vec(F, algebra.dim());
  for (size_t i = 0; i < proj_rows.size(); ++i)
    if (!F.is_zero(v[i])) vec_axpy(F, r, v[i], proj_rows[i]);
  return r;
}

QuotientResult quotient_algebra(const AugmentedAlgebra& A, const Subspace& J) {
  const Field& F = A.field();
  int n = A.dim();
  if (J.ambient() != n) throw std::invalid_argument("ideal lives in the wrong space");
  if (!A.radical().contains(J))
    throw std::invalid_argument("ideal is not contained in the augmentation ideal");
  for (const Vec& r : J.rows())
    for (int i = 0; i < n; ++i) {
      if (!J.contains(A.alg().mul(A.alg().e(i), r)) ||
          !J.contains(A.alg().mul(r, A.alg().e(i))))
        throw std::invalid_argument("subspace is not a two-sided ideal");
    }
  // section: standard basis vectors that survive, in order
  Subspace acc = J;
  std::vector<Vec> section;
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(F, n, i);
    if (acc.insert(ei)) section.push_back(std::move(ei));
  }
  int q = static_cast<int>(section.size());
  // coordinates mod J: solve against [section | J-basis], keep section part
  std::vector<Vec> solver_basis = section;
  for (const Vec& r : J.rows()) solver_basis.push_back(r);
  CoordinateSolver cs(F, n, solver_basis);
  auto project_raw = [&](const Vec& v) {
    auto c = cs.coords(v);
    if (!c) throw std::logic_error("quotient projection failed");
    return Vec(c->begin(), c->begin() + q);
  };
  std::vector<Vec> proj_rows;
  for (int i = 0; i < n; ++i) proj_rows.push_back(project_raw(unit_vec(F, n, i)));

  Algebra Q;
  Q.field = F;
  Q.dim = q;
  Q.mult.assign(static_cast<size_t>(q) * q, {});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      Vec prod = project_raw(A.alg().mul(section[a], section[b]));
      std::vector<std::pair<int, Scalar>> terms;
      for (int k = 0; k < q; ++k)
        if (!F.is_zero(prod[k])) terms.emplace_back(k, prod[k]);
      Q.set_table(a, b, std::move(terms));
    }
  Q.unit = project_raw(A.alg().unit);
  for (int a = 0; a < q; ++a) {
    int orig = -1;
    for (int i = 0; i < n; ++i)
      if (!F.is_zero(section[a][i])) {
        orig = i;
        break;
      }
    Q.labels.push_back(A.alg().label(orig));
  }
  Vec eps_q(q, F.zero());
  for (int a = 0; a < q; ++a) eps_q[a] = A.eps_of(section[a]);
  return QuotientResult{AugmentedAlgebra(std::move(Q), std::move(eps_q)), std::move(proj_rows),
                        std::move(section)};
}

AugmentedAlgebra tensor_algebra(const AugmentedAlgebra& A, const AugmentedAlgebra& B) {
  const Field& F = A.field();
  if (F != B.field()) throw std::invalid_argument("tensor factors over different fields");
  int na = A.dim(), nb = B.dim(), n = na * nb;
  Algebra T;
  T.field = F;
  T.dim = n;
  T.mult.assign(static_cast<size_t>(n) * n, {});
  auto idx = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          std::vector<std::pair<int, Scalar>> terms;
          for (const auto& [x, cx] : A.alg().table(i, k))
            for (const auto& [y, cy] : B.alg().table(j, l))
              terms.emplace_back(idx(x, y), F.mul(cx, cy));
          T.set_table(idx(i, j), idx(k, l), std::move(terms));
        }
  T.unit = zero_vec(F, n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      T.unit[idx(i, j)] = F.mul(A.alg().unit[i], B.alg().unit[j]);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      T.labels.push_back(A.alg().label(i) + "*" + B.alg().label(j));
  Vec eps(n, F.zero());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) eps[idx(i, j)] = F.mul(A.eps()[i], B.eps()[j]);
  return AugmentedAlgebra(std::move(T), std::move(eps));
}

Vec GradedAlgebra::project_layer(const Field& F, const Vec& v, int layer) const {
  Vec out = zero_vec(F, algebra.dim());
  if (layer < 0 || layer >= static_cast<int>(layer_dims.size())) return out;
  const auto& rows = layer_coord_rows[layer];
  for (size_t i = 0; i < v.size(); ++i)
    if (!F.is_zero(v[i]))
      for (int k = 0; k < layer_dims[layer]; ++k)
        out[layer_offset[layer] + k] =
            F.add(out[layer_offset[layer] + k], F.mul(v[i], rows[i][k]));
  return out;
}

GradedAlgebra associated_graded(const AugmentedAlgebra& A) {
  const Field& F = A.field();
  int n = A.dim();
  const RadicalFiltration& fil = A.filtration();
  int c = fil.nilindex();

  std::vector<int> layer_dims(c), layer_offset(c);
  std::vector<Vec> reps;
  std::vector<int> layer_of;
  std::vector<Vec> pool;
  for (int i = 0; i < n; ++i) pool.push_back(unit_vec(F, n, i));
  std::vector<std::vector<Vec>> layer_reps(c);
  layer_reps[0] = {A.alg().unit};  // R^0/R^1 is spanned by the unit
  for (int m = 1; m < c; ++m) {
    // prefer standard basis vectors as representatives; when the layer holds
    // none (group algebras: no basis element is augmentation-free), fall back
    // to the filtration's own spanning rows
    std::vector<Vec> pool_m = pool;
    for (const Vec& r : fil.powers[m].rows()) pool_m.push_back(r);
    layer_reps[m] = quotient_reps(fil.powers[m], fil.powers[m + 1], &pool_m);
  }
  for (int m = 0; m < c; ++m) {
    layer_offset[m] = static_cast<int>(reps.size());
    layer_dims[m] = static_cast<int>(layer_reps[m].size());
    for (Vec& v : layer_reps[m]) {
      reps.push_back(v);
      layer_of.push_back(m);
    }
  }
  int N = static_cast<int>(reps.size());
  if (N != n) throw std::logic_error("graded dimension mismatch");

  // per-layer coordinate maps: solve against [layer reps | R^{m+1} | rest]
  std::vector<std::vector<Vec>> layer_coord_rows(c);
  for (int m = 0; m < c; ++m) {
    std::vector<Vec> basis = layer_reps[m];
    for (const Vec& r : fil.powers[m + 1].rows()) basis.push_back(r);
    Subspace seen(F, n, basis);
    for (int i = 0; i < n && seen.dim() < n; ++i) {
      Vec ei = unit_vec(F, n, i);
      if (seen.insert(ei)) basis.push_back(ei);
    }
    CoordinateSolver cs(F, n, basis);
    layer_coord_rows[m].reserve(n);
    for (int i = 0; i < n; ++i) {
      auto cvec = cs.coords(unit_vec(F, n, i));
      if (!cvec) throw std::logic_error("layer coordinate solve failed");
      layer_coord_rows[m].push_back(Vec(cvec->begin(), cvec->begin() + layer_dims[m]));
    }
  }

  Algebra g;
  g.field = F;
  g.dim = N;
  g.mult.assign(static_cast<size_t>(N) * N, {});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int m = layer_of[a] + layer_of[b];
      std::vector<std::pair<int, Scalar>> terms;
      if (m < c) {
        Vec prod = A.alg().mul(reps[a], reps[b]);
        // coordinates of prod in layer m (prod lies in R^m)
        const auto& rows = layer_coord_rows[m];
        Vec coeff(layer_dims[m], F.zero());
        for (int i = 0; i < n; ++i)
          if (!F.is_zero(prod[i]))
            for (int k = 0; k < layer_dims[m]; ++k)
              coeff[k] = F.add(coeff[k], F.mul(prod[i], rows[i][k]));
        for (int k = 0; k < layer_dims[m]; ++k)
          if (!F.is_zero(coeff[k])) terms.emplace_back(layer_offset[m] + k, coeff[k]);
      }
      g.set_table(a, b, std::move(terms));
    }
  g.unit = unit_vec(F, N, 0);
  for (int a = 0; a < N; ++a)
    g.labels.push_back("gr" + std::to_string(layer_of[a]) + "_" + std::to_string(a - layer_offset[layer_of[a]]));
  Vec eps = zero_vec(F, N);
  eps[0] = F.one();
  return GradedAlgebra{AugmentedAlgebra(std::move(g), std::move(eps)),
                       std::move(layer_dims),
                       std::move(layer_offset),
                       std::move(reps),
                       std::move(layer_of),
                       std::move(layer_coord_rows)};
}

}  // namespace fmb

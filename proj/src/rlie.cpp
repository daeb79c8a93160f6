#include "fmb/rlie.hpp"

#include <sstream>

namespace fmb {

void RestrictedLieAlgebra::set_bracket(int i, int j, const Vec& v) {
  bracket_table[static_cast<size_t>(i) * dim + j] = v;
  Vec neg(v.size());
  for (size_t k = 0; k < v.size(); ++k) neg[k] = field.neg(v[k]);
  bracket_table[static_cast<size_t>(j) * dim + i] = std::move(neg);
}

Vec RestrictedLieAlgebra::bracket(const Vec& a, const Vec& b) const {
  Vec r = zero_vec(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (field.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (field.is_zero(b[j])) continue;
      vec_axpy(field, r, field.mul(a[i], b[j]), bracket_basis(i, j));
    }
  }
  return r;
}

std::string RestrictedLieAlgebra::label(int i) const {
  if (i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
  return "e" + std::to_string(i);
}

std::vector<ValidationIssue> validate_restricted(const RestrictedLieAlgebra& L) {
  std::vector<ValidationIssue> issues;
  auto flag = [&issues](std::string s) { issues.push_back({std::move(s)}); };
  const Field& F = L.field;
  if (L.dim <= 0) {
    flag("dimension must be positive");
    return issues;
  }
  if (L.bracket_table.size() != static_cast<size_t>(L.dim) * L.dim ||
      static_cast<int>(L.pmap.size()) != L.dim) {
    flag("bracket or p-map table has wrong shape");
    return issues;
  }
  for (const Vec& v : L.bracket_table)
    if (static_cast<int>(v.size()) != L.dim) {
      flag("bracket entry has wrong length");
      return issues;
    }
  for (const Vec& v : L.pmap)
    if (static_cast<int>(v.size()) != L.dim) {
      flag("p-map entry has wrong length");
      return issues;
    }
  for (int i = 0; i < L.dim && issues.empty(); ++i)
    if (!is_zero_vec(F, L.bracket_basis(i, i))) flag("bracket not alternating at " + L.label(i));
  for (int i = 0; i < L.dim && issues.empty(); ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      Vec s = vec_add(F, L.bracket_basis(i, j), L.bracket_basis(j, i));
      if (!is_zero_vec(F, s)) {
        flag("bracket not antisymmetric at (" + L.label(i) + "," + L.label(j) + ")");
        break;
      }
    }
  for (int i = 0; i < L.dim && issues.empty(); ++i)
    for (int j = i + 1; j < L.dim && issues.empty(); ++j)
      for (int k = j + 1; k < L.dim; ++k) {
        Vec s = L.bracket(L.bracket_basis(i, j), unit_vec(F, L.dim, k));
        s = vec_add(F, s, L.bracket(L.bracket_basis(j, k), unit_vec(F, L.dim, i)));
        s = vec_add(F, s, L.bracket(L.bracket_basis(k, i), unit_vec(F, L.dim, j)));
        if (!is_zero_vec(F, s)) {
          std::ostringstream os;
          os << "Jacobi identity fails at (" << L.label(i) << "," << L.label(j) << ","
             << L.label(k) << ")";
          flag(os.str());
          break;
        }
      }
  // ad(e_i^{[p]}) = ad(e_i)^p suffices to make the basis p-map extend to a
  // restriction map
  for (int i = 0; i < L.dim && issues.empty(); ++i) {
    for (int j = 0; j < L.dim; ++j) {
      Vec v = unit_vec(F, L.dim, j);
      for (uint32_t r = 0; r < F.p(); ++r) v = L.bracket(unit_vec(F, L.dim, i), v);
      Vec w = L.bracket(L.pmap[i], unit_vec(F, L.dim, j));
      if (v != w) {
        flag("p-map incompatible with ad^p at (" + L.label(i) + "," + L.label(j) + ")");
        break;
      }
    }
  }
  return issues;
}

LieSeries lie_series(const RestrictedLieAlgebra& L) {
  const Field& F = L.field;
  LieSeries S;
  Subspace full(F, L.dim);
  for (int i = 0; i < L.dim; ++i) full.insert(unit_vec(F, L.dim, i));
  S.lower_central.push_back(full);
  while (S.lower_central.back().dim() > 0) {
    const Subspace& prev = S.lower_central.back();
    Subspace next(F, L.dim);
    for (const Vec& a : prev.rows())
      for (int j = 0; j < L.dim; ++j) next.insert(L.bracket(a, unit_vec(F, L.dim, j)));
    if (next.dim() >= prev.dim())
      throw std::invalid_argument("Lie algebra is not nilpotent: lower central series stalls");
    S.lower_central.push_back(std::move(next));
  }
  S.derived = S.lower_central.size() > 1 ? S.lower_central[1] : Subspace(F, L.dim);
  std::vector<Vec> rows;
  for (int j = 0; j < L.dim; ++j)
    for (int k = 0; k < L.dim; ++k) {
      Vec row(L.dim);
      for (int i = 0; i < L.dim; ++i) row[i] = L.bracket_basis(i, j)[k];
      rows.push_back(std::move(row));
    }
  S.center = null_space(F, L.dim, rows);
  // lower_central = (L, [L,L], ..., 0): the class is the number of nonzero terms
  S.nilpotency_class = static_cast<int>(S.lower_central.size()) - 1;
  if (S.nilpotency_class < 0) S.nilpotency_class = 0;
  S.abelian = S.derived.dim() == 0;
  return S;
}

RestrictedLieAlgebra lie_change_basis(const RestrictedLieAlgebra& L,
                                      const std::vector<Vec>& new_basis,
                                      const std::vector<Vec>& pmap_on_new_basis,
                                      const std::vector<std::string>& new_labels) {
  const Field& F = L.field;
  int n = L.dim;
  if (static_cast<int>(new_basis.size()) != n)
    throw std::invalid_argument("basis change needs a full basis");
  CoordinateSolver cs(F, n, new_basis);
  if (!cs.independent()) throw std::invalid_argument("basis change vectors are dependent");
  auto to_new = [&](const Vec& v) {
    auto c = cs.coords(v);
    if (!c) throw std::logic_error("basis change solve failed");
    return *c;
  };
  RestrictedLieAlgebra M;
  M.field = F;
  M.dim = n;
  M.labels = new_labels;
  M.bracket_table.assign(static_cast<size_t>(n) * n, zero_vec(F, n));
  M.pmap.assign(n, zero_vec(F, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      M.set_bracket(i, j, to_new(L.bracket(new_basis[i], new_basis[j])));
  for (int i = 0; i < n; ++i) M.pmap[i] = to_new(pmap_on_new_basis[i]);
  return M;
}

RestrictedLieAlgebra lie_direct_sum(const RestrictedLieAlgebra& A,
                                    const RestrictedLieAlgebra& B) {
  const Field& F = A.field;
  if (F != B.field) throw std::invalid_argument("direct sum over different fields");
  int n = A.dim + B.dim;
  RestrictedLieAlgebra L;
  L.field = F;
  L.dim = n;
  L.bracket_table.assign(static_cast<size_t>(n) * n, zero_vec(F, n));
  L.pmap.assign(n, zero_vec(F, n));
  auto lift_a = [&](const Vec& v) {
    Vec w = zero_vec(F, n);
    for (int i = 0; i < A.dim; ++i) w[i] = v[i];
    return w;
  };
  auto lift_b = [&](const Vec& v) {
    Vec w = zero_vec(F, n);
    for (int i = 0; i < B.dim; ++i) w[A.dim + i] = v[i];
    return w;
  };
  for (int i = 0; i < A.dim; ++i)
    for (int j = i + 1; j < A.dim; ++j) L.set_bracket(i, j, lift_a(A.bracket_basis(i, j)));
  for (int i = 0; i < B.dim; ++i)
    for (int j = i + 1; j < B.dim; ++j)
      L.set_bracket(A.dim + i, A.dim + j, lift_b(B.bracket_basis(i, j)));
  for (int i = 0; i < A.dim; ++i) L.pmap[i] = lift_a(A.pmap[i]);
  for (int i = 0; i < B.dim; ++i) L.pmap[A.dim + i] = lift_b(B.pmap[i]);
  for (int i = 0; i < A.dim; ++i) L.labels.push_back(A.label(i));
  for (int i = 0; i < B.dim; ++i) L.labels.push_back(B.label(i));
  return L;
}

namespace {

// abelian p-map as data: v -> sum_i v_i^p * rows[i]
struct SemilinearMap {
  const Field& F;
  const std::vector<Vec>& rows;
  Vec apply(const Vec& v) const {
    Vec r = zero_vec(F, static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      if (!F.is_zero(v[i])) vec_axpy(F, r, F.pow(v[i], F.p()), rows[i]);
    return r;
  }
};

CyclicDecomposition jordan_chains(const RestrictedLieAlgebra& L) {
  // prime field: x -> x^{[p]} is F_p-linear on an abelian algebra
  const Field& F = L.field;
  int n = L.dim;
  SemilinearMap N{F, L.pmap};
  std::vector<Subspace> ker;  // ker[j] = kernel of N^j
  ker.push_back(Subspace(F, n));
  while (ker.back().dim() < n) {
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
      Vec v = unit_vec(F, n, i);
      for (int j = 0; j < static_cast<int>(ker.size()); ++j) v = N.apply(v);
      rows.push_back(v);
    }
    // kernel of N^j: transpose convention of null_space wants the matrix rows
    // as linear functionals; build them columnwise
    std::vector<Vec> funcs;
    for (int k = 0; k < n; ++k) {
      Vec f(n);
      for (int i = 0; i < n; ++i) f[i] = rows[i][k];
      funcs.push_back(std::move(f));
    }
    Subspace K = null_space(F, n, funcs);
    if (K.dim() <= ker.back().dim())
      throw std::invalid_argument("p-map is not nilpotent");
    ker.push_back(std::move(K));
  }
  int q = static_cast<int>(ker.size()) - 1;
  std::vector<std::vector<Vec>> tops(q + 1);
  Subspace seen = ker[0];
  std::vector<Vec> level_images;  // N^(k-j) t for tops t of level k > j, maintained per level
  CyclicDecomposition out;
  out.decomposable = true;
  for (int j = q; j >= 1; --j) {
    Subspace blocked = ker[j - 1];
    for (const Vec& img : level_images) blocked.insert(img);
    // candidate pool: standard basis vectors inside ker[j] first (they give
    // readable chains), then the kernel's own rows to guarantee completeness
    std::vector<Vec> pool;
    for (int i = 0; i < n; ++i) {
      Vec e = unit_vec(F, n, i);
      if (ker[j].contains(e)) pool.push_back(std::move(e));
    }
    for (const Vec& r : ker[j].rows()) pool.push_back(r);
    for (const Vec& cand : pool)
      if (blocked.insert(cand)) tops[j].push_back(cand);
    // push the images of all tops at this and higher levels one step down
    for (Vec& img : level_images) img = N.apply(img);
    for (const Vec& t : tops[j]) level_images.push_back(N.apply(t));
  }
  for (int j = q; j >= 1; --j)
    for (const Vec& t : tops[j]) {
      CyclicSummand s;
      s.length = j;
      Vec v = t;
      for (int step = 0; step < j; ++step) {
        s.chain.push_back(v);
        v = N.apply(v);
      }
      out.summands.push_back(std::move(s));
    }
  // sanity: the chains must assemble into a basis
  std::vector<Vec> all;
  for (const auto& s : out.summands)
    for (const Vec& v : s.chain) all.push_back(v);
  CoordinateSolver cs(F, n, all);
  if (static_cast<int>(all.size()) != n || !cs.independent())
    throw std::logic_error("Jordan chains failed to form a basis");
  return out;
}

CyclicDecomposition semilinear_rank1(const RestrictedLieAlgebra& L) {
  const Field& F = L.field;
  int n = L.dim;
  CyclicDecomposition out;
  // image span of the basis p-powers; for an abelian algebra the image of the
  // whole p-map lies in (and spans) this space
  Subspace img(F, n, L.pmap);
  if (img.dim() == 0) {
    out.decomposable = true;
    for (int i = 0; i < n; ++i) {
      CyclicSummand s;
      s.length = 1;
      s.chain.push_back(unit_vec(F, n, i));
      out.summands.push_back(std::move(s));
    }
    return out;
  }
  if (img.dim() > 1) {
    out.decomposable = false;
    out.obstruction = "semilinear p-map of rank > 1 over F_p(t) is not classified here";
    return out;
  }
  Vec z = img.rows()[0];
  SemilinearMap N{F, L.pmap};
  if (!is_zero_vec(F, N.apply(z))) {
    out.decomposable = false;
    out.obstruction = "image generator is not in the kernel; chain of length > 2 over F_p(t)";
    return out;
  }
  // write e_i^{[p]} = c_i z; pick a pivot with c invertible whose coefficient
  // is "1-like", then try to decouple the others: e_i - b e_pivot kills the
  // p-power iff c_i = b^p c_pivot, i.e. c_i / c_pivot is a p-th power
  std::vector<Scalar> c(n, F.zero());
  CoordinateSolver zc(F, n, {z});
  int pivot = -1;
  for (int i = 0; i < n; ++i) {
    auto co = zc.coords(L.pmap[i]);
    if (!co) throw std::logic_error("rank-1 coordinates failed");
    c[i] = (*co)[0];
    if (pivot < 0 && !F.is_zero(c[i])) pivot = i;
  }
  std::vector<Vec> kernel_gens;  // decoupled length-1 chains
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    if (F.is_zero(c[i])) {
      kernel_gens.push_back(unit_vec(F, n, i));
      continue;
    }
    auto root = F.pth_root(F.div(c[i], c[pivot]));
    if (!root) {
      out.decomposable = false;
      out.obstruction = "coefficient ratio is not a p-th power in F_p(t)";
      out.non_power_witness = F.div(c[i], c[pivot]);
      return out;
    }
    Vec g = unit_vec(F, n, i);
    vec_axpy(F, g, F.neg(*root), unit_vec(F, n, pivot));
    kernel_gens.push_back(std::move(g));
  }
  // z itself lies inside the pivot chain; drop one kernel generator that is
  // dependent on the others plus the chain
  CyclicSummand main;
  main.length = 2;
  main.chain = {unit_vec(F, n, pivot), N.apply(unit_vec(F, n, pivot))};
  Subspace acc(F, n, main.chain);
  out.decomposable = true;
  out.summands.push_back(main);
  for (const Vec& g : kernel_gens)
    if (acc.insert(g)) {
      CyclicSummand s;
      s.length = 1;
      s.chain.push_back(g);
      out.summands.push_back(std::move(s));
    }
  if (acc.dim() != n) throw std::logic_error("rank-1 decomposition incomplete");
  return out;
}

}  // namespace

CyclicDecomposition cyclic_decomposition(const RestrictedLieAlgebra& L) {
  for (const Vec& row : L.bracket_table)
    if (!is_zero_vec(L.field, row))
      throw std::invalid_argument("cyclic decomposition needs an abelian algebra");
  if (L.field.kind() == FieldKind::Prime) return jordan_chains(L);
  return semilinear_rank1(L);
}

}  // namespace fmb

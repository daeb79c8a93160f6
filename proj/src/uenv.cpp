#include "fmb/uenv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fmb {

namespace {

constexpr uint64_t kMaxEnvelopeDim = 20000;

uint64_t checked_power(uint32_t p, int n) {
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= p;
    if (total > kMaxEnvelopeDim)
      throw std::invalid_argument("enveloping algebra dimension p^n exceeds supported size");
  }
  return total;
}

struct PbwData {
  std::vector<std::vector<uint8_t>> monomials;  // sorted by (weight, lex)
  std::vector<int> ordinal_to_index;
  std::vector<int> weight;
  std::vector<int> deg1;  // index of the monomial x_k
  Algebra alg;
};

// PBW basis of u(L) on the given basis order of L, with monomials ordered by
// (weight, lex). Products are computed by the straightening rules
//   x_k x_i -> x_i x_k + [x_k, x_i]   (k > i)
//   x_i^p   -> x_i^{[p]}
// which terminate by the (degree, inversions) measure.
PbwData build_pbw(const RestrictedLieAlgebra& L, const std::vector<int>& weights) {
  const Field& F = L.field;
  const uint32_t p = F.p();
  const int n = L.dim;
  const uint64_t total = checked_power(p, n);
  PbwData D;
  std::vector<uint64_t> pow(n + 1, 1);
  for (int i = 0; i < n; ++i) pow[i + 1] = pow[i] * p;

  std::vector<std::vector<uint8_t>> raw(total);
  std::vector<int> w(total, 0);
  for (uint64_t o = 0; o < total; ++o) {
    std::vector<uint8_t> exps(n, 0);
    uint64_t r = o;
    int wt = 0;
    for (int i = 0; i < n; ++i) {
      exps[i] = static_cast<uint8_t>(r % p);
      r /= p;
      wt += exps[i] * weights[i];
    }
    raw[o] = std::move(exps);
    w[o] = wt;
  }
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] < w[b];
    return raw[a] < raw[b];
  });
  D.ordinal_to_index.assign(total, -1);
  for (uint64_t k = 0; k < total; ++k) {
    D.monomials.push_back(raw[order[k]]);
    D.weight.push_back(w[order[k]]);
    D.ordinal_to_index[order[k]] = static_cast<int>(k);
  }
  D.deg1.assign(n, -1);
  for (int i = 0; i < n; ++i) D.deg1[i] = D.ordinal_to_index[pow[i]];
  const int N = static_cast<int>(total);
  auto ordinal_of = [&](const std::vector<uint8_t>& exps) {
    uint64_t o = 0;
    for (int i = 0; i < n; ++i) o += exps[i] * pow[i];
    return o;
  };

  std::vector<std::vector<Vec>> memo(N, std::vector<Vec>(n));
  std::function<const Vec&(int, int)> gen_mul;
  auto mul_vec_by_gen = [&](const Vec& v, int i) {
    Vec r = zero_vec(F, N);
    for (int m = 0; m < N; ++m)
      if (!F.is_zero(v[m])) vec_axpy(F, r, v[m], gen_mul(m, i));
    return r;
  };
  auto mul_vec_by_lie = [&](const Vec& v, const Vec& lie) {
    Vec r = zero_vec(F, N);
    for (int j = 0; j < n; ++j)
      if (!F.is_zero(lie[j])) {
        Vec t = mul_vec_by_gen(v, j);
        vec_axpy(F, r, lie[j], t);
      }
    return r;
  };
  gen_mul = [&](int m, int i) -> const Vec& {
    Vec& slot = memo[m][i];
    if (!slot.empty()) return slot;
    const std::vector<uint8_t>& exps = D.monomials[m];
    int k = -1;
    for (int j = n - 1; j >= 0; --j)
      if (exps[j] > 0) {
        k = j;
        break;
      }
    Vec res;
    if (k <= i) {
      if (exps[i] + 1u < p) {
        std::vector<uint8_t> e2 = exps;
        e2[i]++;
        res = unit_vec(F, N, D.ordinal_to_index[ordinal_of(e2)]);
      } else {
        // x_i^p reduces to the p-map image, multiplied back on the right
        std::vector<uint8_t> e2 = exps;
        e2[i] = 0;
        Vec base = unit_vec(F, N, D.ordinal_to_index[ordinal_of(e2)]);
        res = mul_vec_by_lie(base, L.pmap[i]);
      }
    } else {
      std::vector<uint8_t> e2 = exps;
      e2[k]--;
      int a = D.ordinal_to_index[ordinal_of(e2)];
      Vec axi = gen_mul(a, i);
      res = mul_vec_by_gen(axi, k);
      Vec corr = mul_vec_by_lie(unit_vec(F, N, a), L.bracket_basis(k, i));
      res = vec_add(F, res, corr);
    }
    slot = std::move(res);
    return slot;
  };

  D.alg.field = F;
  D.alg.dim = N;
  D.alg.mult.assign(static_cast<size_t>(N) * N, {});
  for (int b = 0; b < N; ++b) {
    const std::vector<uint8_t>& eb = D.monomials[b];
    for (int a = 0; a < N; ++a) {
      Vec v = unit_vec(F, N, a);
      for (int i = 0; i < n; ++i)
        for (int rep = 0; rep < eb[i]; ++rep) v = mul_vec_by_gen(v, i);
      std::vector<std::pair<int, Scalar>> terms;
      for (int kk = 0; kk < N; ++kk)
        if (!F.is_zero(v[kk])) terms.emplace_back(kk, v[kk]);
      D.alg.set_table(a, b, std::move(terms));
    }
  }
  D.alg.unit = unit_vec(F, N, 0);
  for (int m = 0; m < N; ++m) {
    const auto& exps = D.monomials[m];
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (!exps[i]) continue;
      if (!first) os << "*";
      first = false;
      os << L.label(i);
      if (exps[i] > 1) os << "^" << static_cast<int>(exps[i]);
    }
    D.alg.labels.push_back(first ? "1" : os.str());
  }
  if (!D.monomials[0].empty() &&
      std::any_of(D.monomials[0].begin(), D.monomials[0].end(), [](uint8_t e) { return e != 0; }))
    throw std::logic_error("empty monomial is not first");
  return D;
}

// p-th power of a general Lie element, evaluated inside a PBW algebra built on
// the same basis order as v's coordinates
Vec pbw_pmap_eval(const PbwData& U, const Field& F, int n, const Vec& v) {
  const int N = U.alg.dim;
  Vec w = zero_vec(F, N);
  for (int i = 0; i < n; ++i) w[U.deg1[i]] = v[i];
  Vec acc = w;
  for (uint32_t step = 1; step < F.p(); ++step) acc = U.alg.mul(acc, w);
  Vec out = zero_vec(F, n);
  for (int m = 0; m < N; ++m) {
    if (F.is_zero(acc[m])) continue;
    const auto& exps = U.monomials[m];
    int deg = 0, var = -1;
    for (int i = 0; i < n; ++i) {
      deg += exps[i];
      if (exps[i] == 1 && var < 0) var = i;
    }
    if (deg == 0) throw std::logic_error("p-th power has a constant term");
    if (deg != 1) throw std::logic_error("p-th power left the Lie algebra");
    out[var] = acc[m];
  }
  return out;
}

bool lie_abelian(const RestrictedLieAlgebra& L) {
  for (const Vec& row : L.bracket_table)
    if (!is_zero_vec(L.field, row)) return false;
  return true;
}

// span of { x^{[p]^j} : x in W }. Exact: over a prime field all p^k elements
// of W are enumerated (k = dim W); over F_p(t) the p-map of an abelian
// algebra is additive and semilinear, so images of a basis already span.
Subspace power_span(const RestrictedLieAlgebra& L, const PbwData& U, const Subspace& W, int j) {
  const Field& F = L.field;
  const int n = L.dim;
  if (j == 0) return W;
  auto power_j = [&](Vec x) {
    for (int step = 0; step < j; ++step) x = pbw_pmap_eval(U, F, n, x);
    return x;
  };
  Subspace S(F, n);
  if (F.kind() == FieldKind::RatFunc) {
    if (!lie_abelian(L))
      throw std::invalid_argument(
          "power spans over F_p(t) are supported for abelian algebras only");
    for (const Vec& r : W.rows()) S.insert(power_j(r));
    return S;
  }
  const int k = W.dim();
  uint64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= F.p();
    if (count > 200000)
      throw std::invalid_argument("power span enumeration too large");
  }
  for (uint64_t o = 1; o < count; ++o) {
    Vec x = zero_vec(F, n);
    uint64_t r = o;
    for (int i = 0; i < k; ++i) {
      uint32_t c = static_cast<uint32_t>(r % F.p());
      r /= F.p();
      if (c) vec_axpy(F, x, F.from_int(c), W.rows()[i]);
    }
    S.insert(power_j(x));
  }
  return S;
}

DimensionChain chain_from(const RestrictedLieAlgebra& L, const PbwData& U) {
  const Field& F = L.field;
  const int n = L.dim;
  LieSeries S = lie_series(L);
  std::vector<std::pair<int, Subspace>> pieces;
  int M = 1;
  for (size_t gi = 0; gi + 1 < S.lower_central.size(); ++gi) {
    const Subspace& gamma = S.lower_central[gi];
    if (gamma.dim() == 0) break;
    int i = static_cast<int>(gi) + 1;
    uint64_t pj = 1;
    for (int j = 0;; ++j) {
      if (j > n + 1)
        throw std::invalid_argument("iterated p-powers do not vanish: not p-nilpotent");
      Subspace piece = power_span(L, U, gamma, j);
      if (piece.dim() == 0) break;
      uint64_t m = i * pj;
      if (m > 4 * kMaxEnvelopeDim) throw std::invalid_argument("dimension chain index overflow");
      pieces.emplace_back(static_cast<int>(m), piece);
      M = std::max<int>(M, static_cast<int>(m));
      pj *= F.p();
    }
  }
  DimensionChain C;
  C.d.resize(M + 2, Subspace(F, n));
  for (int m = 1; m <= M + 1; ++m) {
    Subspace acc(F, n);
    for (const auto& [pm, sp] : pieces)
      if (pm >= m) acc = subspace_sum(acc, sp);
    C.d[m] = std::move(acc);
  }
  if (C.d[M + 1].dim() != 0) throw std::logic_error("dimension chain does not terminate");
  std::vector<Vec> pool;
  for (int i = 0; i < n; ++i) pool.push_back(unit_vec(F, n, i));
  for (int m = 1; m <= M; ++m) {
    std::vector<Vec> level_pool = pool;
    for (const Vec& r : C.d[m].rows()) level_pool.push_back(r);
    std::vector<Vec> reps = quotient_reps(C.d[m], C.d[m + 1], &level_pool);
    for (Vec& v : reps) {
      C.adapted.push_back(std::move(v));
      C.heights.push_back(m);
    }
  }
  if (static_cast<int>(C.adapted.size()) != n)
    throw std::logic_error("adapted basis has wrong size");
  return C;
}

std::string adapted_label(const RestrictedLieAlgebra& L, const Vec& v, int k) {
  const Field& F = L.field;
  int hits = 0, idx = -1;
  for (int i = 0; i < L.dim; ++i)
    if (!F.is_zero(v[i])) {
      ++hits;
      idx = i;
    }
  if (hits == 1 && F.is_one(v[idx])) return L.label(idx);
  return "b" + std::to_string(k);
}

}  // namespace

DimensionChain dimension_chain(const RestrictedLieAlgebra& L) {
  auto issues = validate_restricted(L);
  if (!issues.empty()) throw std::invalid_argument(issues.front().what);
  std::vector<int> unit_weights(L.dim, 1);
  PbwData raw = build_pbw(L, unit_weights);
  return chain_from(L, raw);
}

GradedLie graded_lie(const RestrictedLieAlgebra& L) {
  auto issues = validate_restricted(L);
  if (!issues.empty()) throw std::invalid_argument(issues.front().what);
  const Field& F = L.field;
  const int n = L.dim;
  std::vector<int> unit_weights(n, 1);
  PbwData raw = build_pbw(L, unit_weights);
  DimensionChain C = chain_from(L, raw);
  int M = C.top();
  CoordinateSolver cs(F, n, C.adapted);
  auto to_adapted = [&](const Vec& v) {
    auto c = cs.coords(v);
    if (!c) throw std::logic_error("adapted coordinate solve failed");
    return *c;
  };
  auto project_layer = [&](const Vec& v, int layer) {
    Vec c = to_adapted(v);
    for (int k = 0; k < n; ++k)
      if (C.heights[k] != layer) {
        if (C.heights[k] < layer && !F.is_zero(c[k]))
          throw std::logic_error("element sits above its expected layer");
        c[k] = F.zero();
      }
    return c;
  };
  GradedLie G;
  G.lie.field = F;
  G.lie.dim = n;
  G.lie.bracket_table.assign(static_cast<size_t>(n) * n, zero_vec(F, n));
  G.lie.pmap.assign(n, zero_vec(F, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = C.heights[i] + C.heights[j];
      Vec b = L.bracket(C.adapted[i], C.adapted[j]);
      G.lie.set_bracket(i, j, m <= M ? project_layer(b, m) : zero_vec(F, n));
    }
  for (int i = 0; i < n; ++i) {
    int m = static_cast<int>(F.p()) * C.heights[i];
    Vec pw = pbw_pmap_eval(raw, F, n, C.adapted[i]);
    G.lie.pmap[i] = m <= M ? project_layer(pw, m) : zero_vec(F, n);
  }
  for (int i = 0; i < n; ++i)
    G.lie.labels.push_back(adapted_label(L, C.adapted[i], i));
  G.layer_of = C.heights;
  G.reps = C.adapted;
  return G;
}

int Envelope::mono_index(const std::vector<uint8_t>& exps) const {
  uint64_t o = 0, pw = 1;
  for (size_t i = 0; i < exps.size(); ++i) {
    o += exps[i] * pw;
    pw *= input.field.p();
  }
  return ordinal_to_index[o];
}

Vec Envelope::embed(const Vec& lie_elem) const {
  const Field& F = input.field;
  Vec c = zero_vec(F, input.dim);
  for (int i = 0; i < input.dim; ++i)
    if (!F.is_zero(lie_elem[i])) vec_axpy(F, c, lie_elem[i], adapted_from_input[i]);
  Vec out = zero_vec(F, algebra.dim());
  for (int k = 0; k < input.dim; ++k) {
    std::vector<uint8_t> exps(input.dim, 0);
    exps[k] = 1;
    out[mono_index(exps)] = c[k];
  }
  return out;
}

std::pair<Scalar, Vec> Envelope::restrict_to_lie(const Vec& v) const {
  const Field& F = input.field;
  const int n = input.dim;
  Scalar cst = F.zero();
  Vec adapted_part = zero_vec(F, n);
  for (int m = 0; m < algebra.dim(); ++m) {
    if (F.is_zero(v[m])) continue;
    const auto& exps = monomials[m];
    int deg = 0, var = -1;
    for (int i = 0; i < n; ++i) {
      deg += exps[i];
      if (exps[i] == 1 && var < 0) var = i;
    }
    if (deg == 0)
      cst = v[m];
    else if (deg == 1)
      adapted_part[var] = v[m];
    else
      throw std::invalid_argument("element does not lie in F + L");
  }
  Vec out = zero_vec(F, n);
  for (int k = 0; k < n; ++k)
    if (!F.is_zero(adapted_part[k])) vec_axpy(F, out, adapted_part[k], input_from_adapted[k]);
  return {cst, out};
}

Vec Envelope::pmap_eval(const Vec& lie_elem) const {
  const Field& F = input.field;
  Vec w = embed(lie_elem);
  Vec acc = w;
  for (uint32_t step = 1; step < F.p(); ++step) acc = algebra.alg().mul(acc, w);
  auto [cst, lie] = restrict_to_lie(acc);
  if (!F.is_zero(cst)) throw std::logic_error("p-th power has a constant term");
  return lie;
}

Subspace Envelope::omega_power(int nn) const {
  const Field& F = input.field;
  Subspace S(F, algebra.dim());
  for (int m = 0; m < algebra.dim(); ++m)
    if (mono_height[m] >= nn) S.insert(unit_vec(F, algebra.dim(), m));
  return S;
}

int Envelope::omega_nilindex() const {
  int mx = 0;
  for (int h : mono_height) mx = std::max(mx, h);
  return mx + 1;
}

Envelope build_envelope(const RestrictedLieAlgebra& L) {
  auto issues = validate_restricted(L);
  if (!issues.empty()) throw std::invalid_argument(issues.front().what);
  const Field& F = L.field;
  const int n = L.dim;
  checked_power(F.p(), n);
  std::vector<int> unit_weights(n, 1);
  PbwData raw = build_pbw(L, unit_weights);
  DimensionChain C = chain_from(L, raw);

  std::vector<Vec> pmap_new(n);
  for (int k = 0; k < n; ++k) pmap_new[k] = pbw_pmap_eval(raw, F, n, C.adapted[k]);
  std::vector<std::string> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = adapted_label(L, C.adapted[k], k);
  RestrictedLieAlgebra Lad = lie_change_basis(L, C.adapted, pmap_new, labels);

  PbwData pbw = build_pbw(Lad, C.heights);
  Vec eps = zero_vec(F, pbw.alg.dim);
  eps[0] = F.one();

  CoordinateSolver cs(F, n, C.adapted);
  std::vector<Vec> adapted_from_input(n), input_from_adapted = C.adapted;
  for (int i = 0; i < n; ++i) {
    auto c = cs.coords(unit_vec(F, n, i));
    if (!c) throw std::logic_error("adapted basis is not a basis");
    adapted_from_input[i] = *c;
  }
  std::vector<int> mono_height(pbw.alg.dim);
  for (int m = 0; m < pbw.alg.dim; ++m) mono_height[m] = pbw.weight[m];

  std::vector<int> heights = C.heights;
  return Envelope{L,
                  std::move(Lad),
                  std::move(C),
                  std::move(adapted_from_input),
                  std::move(input_from_adapted),
                  std::move(heights),
                  AugmentedAlgebra(std::move(pbw.alg), std::move(eps)),
                  std::move(pbw.monomials),
                  std::move(mono_height),
                  std::move(pbw.ordinal_to_index)};
}

RestrictedLieAlgebra make_nilcyclic(const Field& F, int s) {
  if (s < 1) throw std::invalid_argument("nilcyclic parameter must be at least 1");
  RestrictedLieAlgebra L;
  L.field = F;
  L.dim = s;
  L.bracket_table.assign(static_cast<size_t>(s) * s, zero_vec(F, s));
  L.pmap.assign(s, zero_vec(F, s));
  for (int i = 0; i + 1 < s; ++i) L.pmap[i] = unit_vec(F, s, i + 1);
  for (int i = 0; i < s; ++i) L.labels.push_back("x" + std::to_string(i + 1));
  return L;
}

RestrictedLieAlgebra make_heisenberg_chain(int s) {
  if (s < 1) throw std::invalid_argument("chain parameter must be at least 1");
  Field F = Field::prime(2);
  int n = 3 * s;
  RestrictedLieAlgebra L;
  L.field = F;
  L.dim = n;
  L.bracket_table.assign(static_cast<size_t>(n) * n, zero_vec(F, n));
  L.pmap.assign(n, zero_vec(F, n));
  // basis x_0..x_{s-1}, y_0..y_{s-1}, z_0..z_{s-1}
  L.set_bracket(0, s, unit_vec(F, n, 2 * s));  // [x_0, y_0] = z_0
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a + 1 < s; ++a) L.pmap[c * s + a] = unit_vec(F, n, c * s + a + 1);
  for (int a = 0; a < s; ++a) L.labels.push_back("x" + std::to_string(a));
  for (int a = 0; a < s; ++a) L.labels.push_back("y" + std::to_string(a));
  for (int a = 0; a < s; ++a) L.labels.push_back("z" + std::to_string(a));
  return L;
}

RestrictedLieAlgebra make_heisenberg3(const Field& F) {
  RestrictedLieAlgebra L;
  L.field = F;
  L.dim = 3;
  L.bracket_table.assign(9, zero_vec(F, 3));
  L.pmap.assign(3, zero_vec(F, 3));
  L.set_bracket(0, 1, unit_vec(F, 3, 2));
  L.labels = {"x", "y", "z"};
  return L;
}

RestrictedLieAlgebra make_family(int m, int n, int s, uint32_t p) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("family needs m + n >= 1");
  if (n > 0 && p != 2)
    throw std::invalid_argument("chain-Heisenberg summands require characteristic 2");
  Field F = Field::prime(p);
  std::optional<RestrictedLieAlgebra> L;
  auto append = [&](RestrictedLieAlgebra block, const std::string& prefix) {
    for (auto& lab : block.labels) lab = prefix + lab;
    L = L ? lie_direct_sum(*L, block) : std::move(block);
  };
  for (int b = 0; b < m; ++b)
    append(make_nilcyclic(F, s), m + n > 1 ? "c" + std::to_string(b + 1) + "." : "");
  for (int b = 0; b < n; ++b)
    append(make_heisenberg_chain(s), m + n > 1 ? "h" + std::to_string(b + 1) + "." : "");
  return *L;
}

RestrictedLieAlgebra make_alpha_family(const Field& F, const Scalar& alpha) {
  RestrictedLieAlgebra L;
  L.field = F;
  L.dim = 3;
  L.bracket_table.assign(9, zero_vec(F, 3));
  L.pmap.assign(3, zero_vec(F, 3));
  L.pmap[0] = vec_scale(F, alpha, unit_vec(F, 3, 2));
  L.pmap[1] = unit_vec(F, 3, 2);
  L.labels = {"x", "y", "z"};
  return L;
}

WordImageBasis word_image_basis(const Envelope& env, const std::vector<Vec>& gens) {
  const Field& F = env.input.field;
  const int N = env.algebra.dim();
  for (const Vec& g : gens)
    if (static_cast<int>(g.size()) != N)
      throw std::invalid_argument("generator has wrong length");
  WordImageBasis out;
  out.members.push_back(env.algebra.alg().unit);
  out.words.push_back({});
  std::map<uint64_t, std::vector<int>> by_hash = {{vec_hash(out.members[0]), {0}}};
  std::vector<std::vector<std::vector<int>>> words_at(1);
  auto lookup = [&](const Vec& v) -> int {
    auto it = by_hash.find(vec_hash(v));
    if (it == by_hash.end()) return -1;
    for (int idx : it->second)
      if (out.members[idx] == v) return idx;
    return -1;
  };
  struct Item {
    std::vector<int> word;
    Vec value;
  };
  int maxlen = env.omega_nilindex() - 1;
  std::vector<Item> frontier = {{{}, env.algebra.alg().unit}};
  for (int len = 1; len <= maxlen && !frontier.empty(); ++len) {
    std::vector<Item> next;
    for (const Item& it : frontier)
      for (size_t g = 0; g < gens.size(); ++g) {
        Item nx;
        nx.word = it.word;
        nx.word.push_back(static_cast<int>(g));
        nx.value = env.algebra.alg().mul(it.value, gens[g]);
        if (is_zero_vec(F, nx.value)) continue;
        int idx = lookup(nx.value);
        if (idx < 0) {
          idx = static_cast<int>(out.members.size());
          out.members.push_back(nx.value);
          out.words.push_back(nx.word);
          by_hash[vec_hash(nx.value)].push_back(idx);
          words_at.push_back({});
        }
        words_at[idx].push_back(nx.word);
        next.push_back(std::move(nx));
      }
    frontier = std::move(next);
  }
  for (size_t i = 0; i < words_at.size(); ++i)
    if (words_at[i].size() >= 2)
      out.collisions.push_back({static_cast<int>(i), words_at[i]});
  CoordinateSolver cs(F, N, out.members);
  out.spans = static_cast<int>(out.members.size()) == N && cs.independent();
  return out;
}


FamilyBasis family_basis(int m, int n, int s, uint32_t p) {
  RestrictedLieAlgebra L = make_family(m, n, s, p);
  Envelope env = build_envelope(L);
  const Field& F = env.input.field;
  struct Block {
    std::vector<Vec> gens;
    std::vector<std::string> gen_names;
    std::string prefix;
  };
  std::vector<Block> blocks;
  int off = 0;
  for (int b = 0; b < m; ++b) {
    Block blk;
    blk.prefix = m + n > 1 ? "c" + std::to_string(b + 1) + "." : "";
    blk.gens = {env.embed(unit_vec(F, L.dim, off))};
    blk.gen_names = {"x"};
    blocks.push_back(std::move(blk));
    off += s;
  }
  for (int b = 0; b < n; ++b) {
    Block blk;
    blk.prefix = m + n > 1 ? "h" + std::to_string(b + 1) + "." : "";
    blk.gens = {env.embed(unit_vec(F, L.dim, off)), env.embed(unit_vec(F, L.dim, off + s))};
    blk.gen_names = {"x", "y"};
    blocks.push_back(std::move(blk));
    off += 3 * s;
  }
  std::vector<std::vector<Vec>> block_members;
  std::vector<std::vector<std::string>> block_names;
  for (const Block& blk : blocks) {
    WordImageBasis wb = word_image_basis(env, blk.gens);
    std::vector<std::string> names;
    for (const auto& w : wb.words) {
      if (w.empty()) {
        names.push_back("1");
        continue;
      }
      std::string nm = blk.prefix;
      for (int g : w) nm += blk.gen_names[g];
      names.push_back(std::move(nm));
    }
    block_members.push_back(wb.members);
    block_names.push_back(std::move(names));
  }
  FamilyBasis out{std::move(env), {}, {}};
  std::vector<size_t> counter(blocks.size(), 0);
  while (true) {
    Vec v = out.env.algebra.alg().unit;
    std::string name;
    for (size_t b = 0; b < blocks.size(); ++b) {
      v = out.env.algebra.alg().mul(v, block_members[b][counter[b]]);
      const std::string& part = block_names[b][counter[b]];
      if (part != "1") {
        if (!name.empty()) name += "*";
        name += part;
      }
    }
    if (name.empty()) name = "1";
    out.members.push_back(std::move(v));
    out.word_names.push_back(std::move(name));
    size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (++counter[b] < block_members[b].size()) break;
      counter[b] = 0;
      if (b == 0) return out;
    }
  }
}

GradedEnvelopeReport graded_envelope_check(const RestrictedLieAlgebra& L) {
  GradedEnvelopeReport rep;
  const Field& F = L.field;
  Envelope E = build_envelope(L);
  const AugmentedAlgebra& A = E.algebra;
  rep.dim = A.dim();
  GradedAlgebra GR = associated_graded(A);
  const Algebra& GA = GR.algebra.alg();

  GradedLie gl = graded_lie(L);
  Envelope Eg = build_envelope(gl.lie);
  if (Eg.algebra.dim() != A.dim()) {
    rep.failures.push_back("envelope of the graded algebra has dimension " +
                           std::to_string(Eg.algebra.dim()) + ", expected " +
                           std::to_string(A.dim()));
    return rep;
  }

  rep.graded_dims_base = GR.layer_dims;
  rep.graded_dims_env.assign(Eg.omega_nilindex(), 0);
  for (int h : Eg.mono_height) rep.graded_dims_env[h] += 1;
  if (rep.graded_dims_base != rep.graded_dims_env)
    rep.failures.push_back("graded dimension vectors differ");

  // generator images: an adapted basis vector of gr(L) with height h lifts to
  // the matching combination of layer representatives; the lift must sit at
  // depth h in u(L), and its layer-h image is the generator's image.
  std::vector<Vec> gen_img(gl.lie.dim);
  for (int k = 0; k < gl.lie.dim; ++k) {
    const Vec& w = Eg.input_from_adapted[k];
    Vec lifted = zero_vec(F, A.dim());
    for (int r = 0; r < gl.lie.dim; ++r) {
      if (F.is_zero(w[r])) continue;
      lifted = vec_add(F, lifted, vec_scale(F, w[r], E.embed(gl.reps[r])));
    }
    if (A.depth(lifted) < Eg.heights[k]) {
      rep.failures.push_back("lift of generator " + std::to_string(k) +
                             " is shallower than its height");
      return rep;
    }
    gen_img[k] = GR.project_layer(F, lifted, Eg.heights[k]);
  }

  // extend over the monomial basis of u(gr(L))
  std::vector<Vec> M(Eg.algebra.dim());
  for (int b = 0; b < Eg.algebra.dim(); ++b) {
    Vec acc = GA.unit;
    for (int k = 0; k < gl.lie.dim; ++k)
      for (int e = 0; e < Eg.monomials[b][k]; ++e) acc = GA.mul(acc, gen_img[k]);
    M[b] = std::move(acc);
  }
  auto apply = [&](const Vec& u) {
    Vec out = zero_vec(F, A.dim());
    for (int b = 0; b < Eg.algebra.dim(); ++b) {
      if (F.is_zero(u[b])) continue;
      out = vec_add(F, out, vec_scale(F, u[b], M[b]));
    }
    return out;
  };

  Subspace image(F, A.dim());
  for (const Vec& m : M) image.insert(m);
  if (image.dim() != A.dim())
    rep.failures.push_back("monomial images span only " + std::to_string(image.dim()) +
                           " dimensions");

  const Algebra& EA = Eg.algebra.alg();
  for (int i = 0; i < Eg.algebra.dim() && rep.failures.size() < 5; ++i)
    for (int j = 0; j < Eg.algebra.dim() && rep.failures.size() < 5; ++j) {
      Vec lhs = apply(EA.basis_product(i, j));
      Vec rhs = GA.mul(M[i], M[j]);
      if (lhs != rhs)
        rep.failures.push_back("multiplicativity fails on basis pair (" + std::to_string(i) +
                               ", " + std::to_string(j) + ")");
    }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace fmb

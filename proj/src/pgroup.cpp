#include "fmb/pgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fmb {

namespace {

bool in_sorted(const std::vector<int>& S, int x) {
  return std::binary_search(S.begin(), S.end(), x);
}

bool is_prime_u(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::string power_label(const std::vector<std::pair<std::string, int>>& parts) {
  std::string out;
  for (const auto& [name, e] : parts) {
    if (e == 0) continue;
    out += name;
    if (e > 1) out += std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

int Group::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (mul(a, b) == identity) return b;
  throw std::logic_error("group element has no inverse");
}

int Group::pow(int a, int e) const {
  int acc = identity;
  for (int s = 0; s < e; ++s) acc = mul(acc, a);
  return acc;
}

int Group::commutator(int a, int b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::string Group::label(int i) const {
  if (i >= 0 && static_cast<size_t>(i) < labels.size() && !labels[i].empty())
    return labels[i];
  return "g" + std::to_string(i);
}

std::vector<ValidationIssue> validate_group(const Group& G) {
  std::vector<ValidationIssue> issues;
  auto bad = [&](std::string w) { issues.push_back({std::move(w)}); };
  int n = G.order;
  if (n < 2) {
    bad("order must be at least 2");
    return issues;
  }
  if (G.table.size() != static_cast<size_t>(n) * n) {
    bad("table size does not match the order");
    return issues;
  }
  for (int v : G.table)
    if (v < 0 || v >= n) {
      bad("table entry out of range");
      return issues;
    }
  if (G.identity < 0 || G.identity >= n) {
    bad("identity index out of range");
    return issues;
  }
  for (int a = 0; a < n; ++a) {
    if (G.mul(G.identity, a) != a || G.mul(a, G.identity) != a)
      bad("identity law fails at element " + G.label(a));
  }
  // latin square: each row and column is a permutation
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      row[G.mul(a, b)] = true;
      col[G.mul(b, a)] = true;
    }
    for (int b = 0; b < n; ++b)
      if (!row[b] || !col[b]) {
        bad("cancellation fails at element " + G.label(a));
        break;
      }
  }
  if (!issues.empty()) return issues;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
          bad("associativity fails at (" + G.label(a) + ", " + G.label(b) + ", " +
              G.label(c) + ")");
          return issues;
        }
  if (!is_prime_u(G.p)) {
    bad("declared prime is not prime");
    return issues;
  }
  int m = n;
  while (m % G.p == 0) m /= G.p;
  if (m != 1) bad("order is not a power of the declared prime");
  return issues;
}

Group group_from_table(int order, std::vector<int> table, std::vector<std::string> labels) {
  Group G;
  G.order = order;
  G.table = std::move(table);
  G.labels = std::move(labels);
  if (order < 2) throw std::invalid_argument("group order must be at least 2");
  // locate the identity
  G.identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = G.mul(e, a) == a && G.mul(a, e) == a;
    if (ok) {
      G.identity = e;
      break;
    }
  }
  if (G.identity < 0) throw std::invalid_argument("group table has no identity");
  // the prime is determined by the order
  G.p = 0;
  for (int q = 2; q <= order; ++q)
    if (is_prime_u(q) && order % q == 0) {
      G.p = q;
      break;
    }
  std::vector<ValidationIssue> issues = validate_group(G);
  if (!issues.empty()) throw std::invalid_argument("invalid group table: " + issues[0].what);
  return G;
}

// ---- bundled groups --------------------------------------------------------

Group make_cyclic_group(uint32_t p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= static_cast<int>(p);
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = power_label({{"a", a}});
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return group_from_table(n, std::move(table), std::move(labels));
}

namespace {

// groups whose elements are pairs (i, j) with a formula product
template <typename Mul>
Group pair_group(int ni, int nj, const char* a, const char* b, Mul&& mul) {
  int n = ni * nj;
  auto idx = [&](int i, int j) { return i + ni * j; };
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j) {
      labels[idx(i, j)] = power_label({{a, i}, {b, j}});
      for (int i2 = 0; i2 < ni; ++i2)
        for (int j2 = 0; j2 < nj; ++j2) {
          auto [ri, rj] = mul(i, j, i2, j2);
          table[static_cast<size_t>(idx(i, j)) * n + idx(i2, j2)] = idx(ri, rj);
        }
    }
  return group_from_table(n, std::move(table), std::move(labels));
}

}  // namespace

Group make_dihedral8() {
  // (r^i s^j)(r^k s^l) = r^{i + k (-1)^j} s^{j+l}
  return pair_group(4, 2, "r", "s", [](int i, int j, int k, int l) {
    int ri = ((i + (j ? -k : k)) % 4 + 4) % 4;
    return std::pair<int, int>(ri, (j + l) % 2);
  });
}

Group make_quaternion8() {
  // a^4 = 1, b^2 = a^2, b a b^{-1} = a^{-1}
  return pair_group(4, 2, "a", "b", [](int i, int j, int k, int l) {
    int ri = ((i + (j ? -k : k) + (j && l ? 2 : 0)) % 4 + 4) % 4;
    return std::pair<int, int>(ri, (j + l) % 2);
  });
}

Group make_modular16() {
  // r^8 = s^2 = 1, s r s = r^5
  return pair_group(8, 2, "r", "s", [](int i, int j, int k, int l) {
    int ri = (i + k * (j ? 5 : 1)) % 8;
    return std::pair<int, int>(ri, (j + l) % 2);
  });
}

Group make_extraspecial27(bool exponent_three) {
  if (exponent_three) {
    // triples (a, b, c) multiplying like unitriangular 3x3 matrices over F_3
    int n = 27;
    auto idx = [](int a, int b, int c) { return a + 3 * b + 9 * c; };
    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          labels[idx(a, b, c)] = power_label({{"x", a}, {"y", b}, {"z", c}});
          for (int a2 = 0; a2 < 3; ++a2)
            for (int b2 = 0; b2 < 3; ++b2)
              for (int c2 = 0; c2 < 3; ++c2)
                table[static_cast<size_t>(idx(a, b, c)) * n +
                      idx(a2, b2, c2)] =
                    idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
        }
    return group_from_table(n, std::move(table), std::move(labels));
  }
  // a^9 = b^3 = 1, b a b^{-1} = a^4
  return pair_group(9, 3, "a", "b", [](int i, int j, int k, int l) {
    int twist = 1;
    for (int s = 0; s < j; ++s) twist = (twist * 4) % 9;
    return std::pair<int, int>((i + k * twist) % 9, (j + l) % 3);
  });
}

Group direct_product(const Group& A, const Group& B) {
  if (A.p != B.p)
    throw std::invalid_argument("direct product needs the same prime on both factors");
  int n = A.order * B.order;
  auto idx = [&](int a, int b) { return a * B.order + b; };
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < B.order; ++b) {
      std::string la = A.label(a), lb = B.label(b);
      labels[idx(a, b)] = la == "1" ? lb : (lb == "1" ? la : la + "." + lb);
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2)
          table[static_cast<size_t>(idx(a, b)) * n + idx(a2, b2)] =
              idx(A.mul(a, a2), B.mul(b, b2));
    }
  return group_from_table(n, std::move(table), std::move(labels));
}

std::vector<std::string> bundled_group_names() {
  return {"c2", "c4", "c2c2", "d8", "q8", "m16", "e27x3", "e27x9", "d8c2"};
}

Group bundled_group(const std::string& name) {
  if (name == "c2") return make_cyclic_group(2, 1);
  if (name == "c4") return make_cyclic_group(2, 2);
  if (name == "c2c2") return direct_product(make_cyclic_group(2, 1), make_cyclic_group(2, 1));
  if (name == "d8") return make_dihedral8();
  if (name == "q8") return make_quaternion8();
  if (name == "m16") return make_modular16();
  if (name == "e27x3") return make_extraspecial27(true);
  if (name == "e27x9") return make_extraspecial27(false);
  if (name == "d8c2") return direct_product(make_dihedral8(), make_cyclic_group(2, 1));
  throw std::invalid_argument("unknown group name \"" + name + "\"");
}

// ---- subgroup machinery ----------------------------------------------------

std::vector<int> subgroup_closure(const Group& G, const std::vector<int>& gens) {
  std::vector<bool> in(G.order, false);
  std::vector<int> elems = {G.identity}, work = {G.identity};
  in[G.identity] = true;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
      work.push_back(x);
    }
  };
  for (int g : gens) add(g);
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < elems.size(); ++i) {  // elems grows during the loop
      int y = elems[i];
      add(G.mul(x, y));
      add(G.mul(y, x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> lower_central_series_group(const Group& G) {
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  std::vector<std::vector<int>> chain = {all};
  while (chain.back().size() > 1) {
    std::vector<int> gens;
    for (int x : chain.back())
      for (int y = 0; y < G.order; ++y) gens.push_back(G.commutator(x, y));
    std::vector<int> next = subgroup_closure(G, gens);
    if (next.size() >= chain.back().size())
      throw std::logic_error("lower central series does not descend (group not nilpotent?)");
    chain.push_back(std::move(next));
  }
  return chain;
}

int group_class(const Group& G) {
  return static_cast<int>(lower_central_series_group(G).size()) - 1;
}

std::vector<int> power_subgroup(const Group& G, const std::vector<int>& H, int k) {
  std::vector<int> gens;
  for (int h : H) gens.push_back(G.pow(h, k));
  return subgroup_closure(G, gens);
}

std::vector<std::vector<int>> dimension_series(const Group& G) {
  std::vector<std::vector<int>> gamma = lower_central_series_group(G);
  std::vector<std::vector<int>> chain;
  chain.push_back(gamma[0]);  // D_1 = G
  for (int n = 2; chain.back().size() > 1; ++n) {
    if (n > 4 * G.order) throw std::logic_error("dimension series fails to terminate");
    std::vector<int> gens;
    for (size_t gi = 0; gi < gamma.size(); ++gi) {
      int i = static_cast<int>(gi) + 1;
      for (long long pj = 1; pj <= G.order; pj *= G.p) {
        if (static_cast<long long>(i) * pj < n) continue;
        for (int h : gamma[gi]) gens.push_back(G.pow(h, static_cast<int>(pj)));
      }
    }
    chain.push_back(subgroup_closure(G, gens));
  }
  return chain;
}

std::vector<std::vector<int>> dimension_series_in_algebra(const Group& G, const Field& F) {
  AugmentedAlgebra FG = group_algebra(G, F);
  const RadicalFiltration& fil = FG.filtration();
  std::vector<std::vector<int>> chain;
  for (int n = 1;; ++n) {
    std::vector<int> dn;
    for (int g = 0; g < G.order; ++g) {
      Vec diff = vec_sub(F, FG.alg().e(g), FG.alg().e(G.identity));
      if (fil.power(n).contains(diff)) dn.push_back(g);
    }
    chain.push_back(std::move(dn));
    if (chain.back().size() == 1) break;
    if (n > 4 * G.order) throw std::logic_error("membership chain fails to terminate");
  }
  return chain;
}

// ---- the restricted Lie algebra on the chain layers ------------------------

Vec JenningsData::class_coords(int elem, int depth) const {
  const Field& F = lie.field;
  Vec out = zero_vec(F, lie.dim);
  int m = static_cast<int>(chain.size());
  if (depth >= m) {
    if (elem != chain.back().front())
      throw std::logic_error("element survives past the chain");
    return out;
  }
  if (!in_sorted(chain[static_cast<size_t>(depth) - 1], elem))
    throw std::logic_error("element lies outside the expected layer");
  const std::vector<int>& exps = layer_coords.at(depth).at(elem);
  for (size_t r = 0; r < exps.size(); ++r)
    out[static_cast<size_t>(slot_start[depth]) + r] = F.from_int(exps[r]);
  return out;
}

JenningsData jennings_lie(const Group& G, const std::vector<int>* element_order) {
  JenningsData J;
  J.chain = dimension_series(G);
  int m = static_cast<int>(J.chain.size());  // last entry is the trivial subgroup
  Field F = Field::prime(static_cast<uint32_t>(G.p));
  auto level = [&](int n) -> const std::vector<int>& {
    // D_n; beyond the chain everything is trivial
    return n <= m ? J.chain[n - 1] : J.chain[m - 1];
  };

  std::vector<int> order_perm;
  if (element_order) {
    order_perm = *element_order;
    std::vector<int> check = order_perm;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < G.order; ++i)
      if (i >= static_cast<int>(check.size()) || check[i] != i)
        throw std::invalid_argument("element order must be a permutation of the elements");
  } else {
    order_perm.resize(G.order);
    for (int i = 0; i < G.order; ++i) order_perm[i] = i;
  }

  // greedy transversal and coordinates per layer
  std::map<int, std::map<int, std::vector<int>>>& coords = J.layer_coords;
  for (int n = 1; n < m; ++n) {
    const std::vector<int>& dn = level(n);
    const std::vector<int>& next = level(n + 1);
    // each layer must be elementary abelian for the construction to go through
    for (int x : dn) {
      if (!in_sorted(next, G.pow(x, G.p)))
        throw std::logic_error("layer " + std::to_string(n) + " is not exponent-p");
      for (int y : dn)
        if (!in_sorted(next, G.commutator(x, y)))
          throw std::logic_error("layer " + std::to_string(n) + " is not abelian");
    }
    JenningsLayer layer;
    layer.depth = n;
    std::vector<int> sub = next;  // grows to all of D_n
    for (int g : order_perm) {
      if (!in_sorted(dn, g) || in_sorted(sub, g)) continue;
      layer.transversal.push_back(g);
      std::vector<int> gens = sub;
      gens.push_back(g);
      sub = subgroup_closure(G, gens);
    }
    if (sub != dn) throw std::logic_error("transversal closure missed part of a layer");
    // exponent tuples over the transversal cover the layer exactly once
    int d = static_cast<int>(layer.transversal.size());
    std::vector<int> exps(d, 0);
    std::map<int, std::vector<int>>& cmap = coords[n];
    for (;;) {
      int base = G.identity;
      for (int r = 0; r < d; ++r) base = G.mul(base, G.pow(layer.transversal[r], exps[r]));
      for (int h : next) {
        int elem = G.mul(base, h);
        auto it = cmap.find(elem);
        if (it != cmap.end() && it->second != exps)
          throw std::logic_error("layer coordinates are inconsistent");
        cmap[elem] = exps;
      }
      int r = d - 1;
      while (r >= 0 && ++exps[r] == G.p) exps[r--] = 0;
      if (r < 0) break;
    }
    if (cmap.size() != dn.size()) throw std::logic_error("layer coordinates incomplete");
    for (int g : layer.transversal) {
      J.layer_of.push_back(n);
      J.rep_of.push_back(g);
    }
    J.layers.push_back(std::move(layer));
  }

  // assemble the Lie algebra: basis = all transversal classes, depth ascending
  int dim = static_cast<int>(J.rep_of.size());
  J.slot_start.assign(m + 1, dim);
  for (int k = dim - 1; k >= 0; --k) J.slot_start[J.layer_of[k]] = k;

  J.lie.field = F;
  J.lie.dim = dim;
  for (int k = 0; k < dim; ++k) J.lie.labels.push_back(G.label(J.rep_of[k]));
  J.lie.bracket_table.assign(static_cast<size_t>(dim) * dim, zero_vec(F, dim));
  J.lie.pmap.assign(dim, zero_vec(F, dim));
  for (int u = 0; u < dim; ++u) {
    for (int v = u + 1; v < dim; ++v) {
      int target = J.layer_of[u] + J.layer_of[v];
      J.lie.set_bracket(u, v,
                        J.class_coords(G.commutator(J.rep_of[u], J.rep_of[v]), target));
    }
    J.lie.pmap[u] = J.class_coords(G.pow(J.rep_of[u], G.p), G.p * J.layer_of[u]);
  }
  std::vector<ValidationIssue> issues = validate_restricted(J.lie);
  if (!issues.empty())
    throw std::logic_error("layer algebra fails validation: " + issues[0].what);
  return J;
}

AugmentedAlgebra group_algebra(const Group& G, const Field& F) {
  if (F.p() != static_cast<uint32_t>(G.p))
    throw std::invalid_argument("group algebra needs coefficients of characteristic " +
                                std::to_string(G.p));
  Algebra A;
  A.field = F;
  A.dim = G.order;
  A.labels = G.labels;
  if (A.labels.empty())
    for (int i = 0; i < G.order; ++i) A.labels.push_back(G.label(i));
  A.mult.assign(static_cast<size_t>(G.order) * G.order, {});
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) A.set_table(a, b, {{G.mul(a, b), F.one()}});
  A.unit = A.e(G.identity);
  Vec eps(G.order, F.one());
  return AugmentedAlgebra(std::move(A), std::move(eps));
}

// ---- gr(FG) versus the restricted envelope ---------------------------------

namespace {

// the layer algebra lives over F_p; transfer its structure constants into F
RestrictedLieAlgebra lie_over_field(const RestrictedLieAlgebra& L, const Field& F) {
  if (F.kind() == FieldKind::Prime && F.p() == L.field.p()) return L;
  if (F.p() != L.field.p())
    throw std::invalid_argument("coefficient field has the wrong characteristic");
  auto carry = [&](const Vec& v) {
    Vec out = zero_vec(F, L.dim);
    for (int i = 0; i < L.dim; ++i) out[i] = F.from_int(v[i].res());
    return out;
  };
  RestrictedLieAlgebra out;
  out.field = F;
  out.dim = L.dim;
  out.labels = L.labels;
  for (const Vec& v : L.bracket_table) out.bracket_table.push_back(carry(v));
  for (const Vec& v : L.pmap) out.pmap.push_back(carry(v));
  return out;
}

}  // namespace

QuillenReport quillen_check(const Group& G, const Field& F) {
  QuillenReport rep;
  rep.dim = G.order;
  JenningsData J = jennings_lie(G);
  Envelope E = build_envelope(lie_over_field(J.lie, F));
  AugmentedAlgebra FG = group_algebra(G, F);
  GradedAlgebra GR = associated_graded(FG);

  if (E.algebra.dim() != G.order) {
    rep.failures.push_back("envelope dimension " + std::to_string(E.algebra.dim()) +
                           " does not match the group order");
    return rep;
  }
  rep.graded_dims_group = GR.layer_dims;
  const RadicalFiltration& efil = E.algebra.filtration();
  for (int n = 0; n < efil.nilindex(); ++n)
    rep.graded_dims_env.push_back(efil.dim_power(n) - efil.dim_power(n + 1));
  if (rep.graded_dims_group != rep.graded_dims_env)
    rep.failures.push_back("graded dimension vectors differ");

  // generator images: a depth-n class goes to the class of g - 1 in layer n.
  // An adapted generator is a combination of transversal classes of depth >=
  // its height, so the lift below lands in the right radical power.
  int dimL = J.lie.dim;
  const Algebra& GA = GR.algebra.alg();
  auto lift = [&](const Vec& w) {
    Vec out = zero_vec(F, G.order);
    for (int r = 0; r < dimL; ++r) {
      if (F.is_zero(w[r])) continue;
      out[J.rep_of[r]] = F.add(out[J.rep_of[r]], w[r]);
      out[G.identity] = F.sub(out[G.identity], w[r]);
    }
    return out;
  };
  std::vector<Vec> gen_img(dimL);
  for (int k = 0; k < dimL; ++k) {
    Vec lifted = lift(E.input_from_adapted[k]);
    if (FG.depth(lifted) < E.heights[k]) {
      rep.failures.push_back("lift of generator " + std::to_string(k) +
                             " is shallower than its height");
      return rep;
    }
    gen_img[k] = GR.project_layer(F, lifted, E.heights[k]);
  }

  // extend over the monomial basis of the envelope
  std::vector<Vec> M(E.algebra.dim());
  for (int b = 0; b < E.algebra.dim(); ++b) {
    Vec acc = GA.unit;
    for (int k = 0; k < dimL; ++k)
      for (int e = 0; e < E.monomials[b][k]; ++e) acc = GA.mul(acc, gen_img[k]);
    M[b] = std::move(acc);
  }
  auto apply = [&](const Vec& u) {
    Vec out = zero_vec(F, G.order);
    for (int b = 0; b < E.algebra.dim(); ++b) {
      if (F.is_zero(u[b])) continue;
      out = vec_add(F, out, vec_scale(F, u[b], M[b]));
    }
    return out;
  };

  Subspace image(F, G.order);
  for (int b = 0; b < E.algebra.dim(); ++b) image.insert(M[b]);
  if (image.dim() != G.order)
    rep.failures.push_back("monomial images span only " + std::to_string(image.dim()) +
                           " dimensions");

  const Algebra& EA = E.algebra.alg();
  for (int i = 0; i < E.algebra.dim() && rep.failures.size() < 5; ++i)
    for (int j = 0; j < E.algebra.dim() && rep.failures.size() < 5; ++j) {
      Vec lhs = apply(EA.basis_product(i, j));
      Vec rhs = GA.mul(M[i], M[j]);
      if (lhs != rhs)
        rep.failures.push_back("multiplicativity fails on basis pair (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  rep.ok = rep.failures.empty();
  return rep;
}

bool is_powerful(const Group& G) {
  std::vector<std::vector<int>> gamma = lower_central_series_group(G);
  if (gamma.size() <= 1) return true;  // abelian
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  std::vector<int> target = power_subgroup(G, all, G.p == 2 ? 4 : G.p);
  for (int g : gamma[1])
    if (!in_sorted(target, g)) return false;
  return true;
}

GroupVerdict corollary2_report(const Group& G, const Field& F, const VerdictOptions& opt) {
  if (F.p() != static_cast<uint32_t>(G.p))
    throw std::invalid_argument("coefficient field has the wrong characteristic");
  GroupVerdict V;
  V.group_class = group_class(G);
  V.powerful = is_powerful(G);
  JenningsData J = jennings_lie(G);
  LieSeries S = lie_series(J.lie);
  V.lie_class = S.nilpotency_class;
  for (int n : J.layer_of)
    if (n == 1) ++V.lie_generators;

  if (G.p > 2 && V.group_class == 2) {
    V.no_fmb = true;
    if (V.lie_class <= 1) {
      V.branch = "powerful";
      V.verdict =
          "no f.m.b. by Corollary 2(ii): class-2 group over odd characteristic; "
          "the layer algebra is abelian, which makes the group powerful, and the "
          "group algebra of a powerful p-group admits no such basis";
    } else {
      V.branch = "lie-class-2";
      V.verdict =
          "no f.m.b. by Corollary 2(ii): class-2 group over odd characteristic; "
          "the layer algebra has class 2, so its restricted envelope admits no "
          "such basis and neither does the group algebra";
    }
  } else {
    V.branch = "none";
    if (V.group_class <= 1)
      V.verdict = "abelian group: no nonexistence citation applies";
    else if (G.p == 2)
      V.verdict = "characteristic 2: no nonexistence citation applies";
    else
      V.verdict = "class exceeds 2: no nonexistence citation applies";
  }

  if (V.lie_class == 2 && V.lie_generators >= 3) {
    Envelope E = build_envelope(lie_over_field(J.lie, F));
    std::vector<Vec> reps;
    for (int k = 0; k < J.lie.dim && reps.size() < 3; ++k)
      if (J.layer_of[k] == 1) reps.push_back(E.embed(unit_vec(F, J.lie.dim, k)));
    V.probe = obstruction_probe(E.algebra, reps);
    V.verdict += "; probe: " + V.probe->statement;
  }

  if (opt.run_search && !V.no_fmb) {
    AugmentedAlgebra FG = group_algebra(G, F);
    V.search = closure_search_fmb(FG, opt.search);
    switch (V.search->status) {
      case SearchStatus::found:
        V.verdict += "; computed: an f.m.b. of the group algebra was found by search";
        break;
      case SearchStatus::none_exhaustive:
        V.verdict += "; computed: exhaustive search found no f.m.b.";
        break;
      case SearchStatus::none_budget:
        V.verdict +=
            "; computed: search found no f.m.b. within budget (inconclusive)";
        break;
    }
  }
  return V;
}

}  // namespace fmb

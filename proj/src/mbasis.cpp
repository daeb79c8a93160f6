#include "fmb/mbasis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fmb {

namespace {

std::string vec_to_string(const Field& F, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << F.to_string(v[i]);
  }
  os << ")";
  return os.str();
}

// exact value -> index lookup with hash buckets
class MemberIndex {
 public:
  MemberIndex(const Field& F, const std::vector<Vec>& members) : F_(F), members_(members) {
    for (size_t i = 0; i < members.size(); ++i)
      buckets_[vec_hash(members[i])].push_back(static_cast<int>(i));
  }
  // -1 when absent
  int find(const Vec& v) const {
    auto it = buckets_.find(vec_hash(v));
    if (it == buckets_.end()) return -1;
    for (int idx : it->second)
      if (members_[static_cast<size_t>(idx)] == v) return idx;
    return -1;
  }

 private:
  const Field& F_;
  const std::vector<Vec>& members_;
  std::map<uint64_t, std::vector<int>> buckets_;
};

}  // namespace

MultiplicativeCheck verify_multiplicative(const Algebra& A, const std::vector<Vec>& members) {
  MultiplicativeCheck out;
  const Field& F = A.field;
  int n = static_cast<int>(members.size());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(members[static_cast<size_t>(i)].size()) != A.dim) {
      out.failures.push_back("member has wrong length");
      return out;
    }
  MemberIndex index(F, members);
  ProductTable table;
  table.n = n;
  table.cell.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec prod = A.mul(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
      if (is_zero_vec(F, prod)) continue;
      int k = index.find(prod);
      if (k < 0) {
        std::ostringstream os;
        os << "product of members " << i << " and " << j
           << " is neither zero nor a member: " << vec_to_string(F, prod);
        out.failures.push_back(os.str());
        return out;
      }
      table.cell[static_cast<size_t>(i) * n + j] = k;
    }
  out.ok = true;
  out.table = std::move(table);
  return out;
}

FmbVerifyReport verify_fmb(const AugmentedAlgebra& A, const std::vector<Vec>& members) {
  FmbVerifyReport out;
  const Field& F = A.field();
  int n = static_cast<int>(members.size());
  if (n != A.dim()) {
    std::ostringstream os;
    os << "expected " << A.dim() << " members, got " << n;
    out.failures.push_back(os.str());
    return out;
  }
  Subspace span(F, A.dim());
  for (const Vec& m : members) span.insert(m);
  if (span.dim() != n) {
    out.failures.push_back("members are linearly dependent");
    return out;
  }
  MultiplicativeCheck mc = verify_multiplicative(A.alg(), members);
  if (!mc.ok) {
    out.failures = mc.failures;
    return out;
  }

  const RadicalFiltration& fil = A.filtration();
  int c = fil.nilindex();
  std::vector<int> depths(static_cast<size_t>(n));
  std::vector<int> layer_counts(static_cast<size_t>(c), 0);
  for (int i = 0; i < n; ++i) {
    int d = A.depth(members[static_cast<size_t>(i)]);
    depths[static_cast<size_t>(i)] = d;
    if (d >= c) {
      out.failures.push_back("zero member");  // only 0 has depth >= nilindex
      return out;
    }
    ++layer_counts[static_cast<size_t>(d)];
  }
  // members of each depth must number the corresponding layer dimension
  for (int d = 0; d < c; ++d) {
    int want = fil.dim_power(d) - fil.dim_power(d + 1);
    if (layer_counts[static_cast<size_t>(d)] != want) {
      std::ostringstream os;
      os << "depth " << d << " holds " << layer_counts[static_cast<size_t>(d)]
         << " members, layer dimension is " << want;
      out.failures.push_back(os.str());
    }
  }
  if (!out.failures.empty()) return out;
  // members that avoid a radical power must stay distinct modulo it
  for (int k = 1; k <= c; ++k) {
    const Subspace& Rk = fil.power(k);
    for (int i = 0; i < n; ++i) {
      if (depths[static_cast<size_t>(i)] >= k) continue;
      for (int j = i + 1; j < n; ++j) {
        if (depths[static_cast<size_t>(j)] >= k) continue;
        Vec diff = vec_sub(F, members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
        if (Rk.contains(diff)) {
          std::ostringstream os;
          os << "members " << i << " and " << j << " coincide modulo radical power " << k;
          out.failures.push_back(os.str());
          return out;
        }
      }
    }
  }

  FmbCertificate cert;
  cert.members = members;
  cert.table = *mc.table;
  cert.depths = std::move(depths);
  cert.layer_counts = std::move(layer_counts);
  out.ok = true;
  out.cert = std::move(cert);
  return out;
}

RayDecomposition ray_decomposition(const AugmentedAlgebra& A, const std::vector<Vec>& members,
                                   const Subspace& K) {
  const Field& F = A.field();
  RayDecomposition out;
  int n = static_cast<int>(members.size());
  std::vector<bool> in_i0(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i)
    if (K.contains(members[static_cast<size_t>(i)])) {
      in_i0[static_cast<size_t>(i)] = true;
      out.i0.push_back(i);
      out.kernel_members.push_back(members[static_cast<size_t>(i)]);
    }
  for (int i = 0; i < n; ++i) {
    if (in_i0[static_cast<size_t>(i)]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (in_i0[static_cast<size_t>(j)]) continue;
      Vec diff = vec_sub(F, members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
      if (K.contains(diff)) {
        out.i1.push_back(i);
        out.partner.push_back(j);
        out.kernel_members.push_back(diff);
        break;
      }
    }
  }
  // keep everything except the members inside K and the partner of each
  // congruent member: congruence classes survive through their first member
  std::vector<bool> drop(static_cast<size_t>(n), false);
  for (int i : out.i0) drop[static_cast<size_t>(i)] = true;
  for (int j : out.partner) drop[static_cast<size_t>(j)] = true;
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<size_t>(i)]) out.i3.push_back(i);
  Subspace collected(F, A.dim());
  for (const Vec& v : out.kernel_members) collected.insert(v);
  // with independent members the collected family is provably independent
  if (collected.dim() != static_cast<int>(out.kernel_members.size()))
    throw std::invalid_argument("ray decomposition needs linearly independent members");
  if (collected.dim() == K.dim()) {
    out.regular = true;
  } else {
    out.regular = false;
    for (const Vec& row : K.rows())
      if (!collected.contains(row)) {
        out.witness = row;
        break;
      }
    if (!out.witness) throw std::logic_error("missing witness for a non-regular ideal");
  }
  return out;
}

QuotientBasisResult quotient_fmb(const AugmentedAlgebra& A, const std::vector<Vec>& members,
                                 const Subspace& K) {
  RayDecomposition rays = ray_decomposition(A, members, K);
  if (!rays.regular)
    throw std::invalid_argument("ideal is not regular for the basis: quotient basis undefined");
  QuotientResult Q = quotient_algebra(A, K);
  const Field& F = A.field();
  std::vector<Vec> images;
  for (int i : rays.i3) images.push_back(Q.project(F, members[static_cast<size_t>(i)]));
  FmbVerifyReport rep = verify_fmb(Q.algebra, images);
  return QuotientBasisResult{std::move(rays), std::move(Q), std::move(rep)};
}

GradedTransportResult transport_fmb_to_gr(const AugmentedAlgebra& A, const GradedAlgebra& G,
                                          const std::vector<Vec>& members) {
  const Field& F = A.field();
  GradedTransportResult out;
  for (const Vec& m : members) {
    int d = A.depth(m);
    if (d >= A.filtration().nilindex())
      throw std::invalid_argument("zero member cannot be transported");
    out.graded_members.push_back(G.project_layer(F, m, d));
  }
  out.report = verify_fmb(G.algebra, out.graded_members);
  return out;
}

ProbeReport obstruction_probe(const AugmentedAlgebra& A, const std::vector<Vec>& reps) {
  if (reps.size() != 3) throw std::invalid_argument("the probe takes exactly three elements");
  const Field& F = A.field();
  const RadicalFiltration& fil = A.filtration();
  for (const Vec& r : reps) {
    if (static_cast<int>(r.size()) != A.dim())
      throw std::invalid_argument("probe element has wrong length");
    if (!fil.power(1).contains(r) || fil.power(2).contains(r))
      throw std::invalid_argument("probe elements must have depth exactly one");
  }
  ProbeReport out;
  out.orderings = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const Algebra& alg = A.alg();
  const Subspace& R3 = fil.power(3);
  const Subspace& R4 = fil.power(std::min(4, fil.nilindex()));
  for (const auto& ord : out.orderings) {
    Vec v = alg.mul(alg.mul(reps[static_cast<size_t>(ord[0])], reps[static_cast<size_t>(ord[1])]),
                    reps[static_cast<size_t>(ord[2])]);
    out.images.push_back(R4.reduce(v));
    out.products.push_back(std::move(v));
  }

  // group orderings by exact product value; groups of two or more are the
  // collisions any basis containing the representatives would be forced into
  std::vector<bool> grouped(6, false);
  for (int i = 0; i < 6; ++i) {
    if (grouped[static_cast<size_t>(i)]) continue;
    std::vector<int> group = {i};
    for (int j = i + 1; j < 6; ++j)
      if (!grouped[static_cast<size_t>(j)] &&
          out.products[static_cast<size_t>(i)] == out.products[static_cast<size_t>(j)])
        group.push_back(j);
    for (int j : group) grouped[static_cast<size_t>(j)] = true;
    if (group.size() >= 2) out.collision_groups.push_back(std::move(group));
  }

  // distinct nonzero values and their images
  std::vector<int> rep_of_value;  // one ordering index per distinct nonzero value
  for (int i = 0; i < 6; ++i) {
    if (is_zero_vec(F, out.products[static_cast<size_t>(i)])) continue;
    bool seen = false;
    for (int r : rep_of_value)
      if (out.products[static_cast<size_t>(r)] == out.products[static_cast<size_t>(i)]) {
        seen = true;
        break;
      }
    if (!seen) rep_of_value.push_back(i);
  }
  out.distinct_nonzero = static_cast<int>(rep_of_value.size());
  Subspace image_span(F, A.dim());
  for (int r : rep_of_value) image_span.insert(out.images[static_cast<size_t>(r)]);
  out.span_dim = image_span.dim();

  int distinct_with_image = 0;
  for (int r : rep_of_value)
    if (!is_zero_vec(F, out.images[static_cast<size_t>(r)])) ++distinct_with_image;

  bool all_in_cube = true;
  for (const Vec& p : out.products)
    if (!R3.contains(p)) all_in_cube = false;
  bool distinct_mod4 = true;
  for (size_t a = 0; a < rep_of_value.size(); ++a)
    for (size_t b = a + 1; b < rep_of_value.size(); ++b)
      if (out.images[static_cast<size_t>(rep_of_value[a])] ==
          out.images[static_cast<size_t>(rep_of_value[b])])
        distinct_mod4 = false;

  out.contradiction = distinct_with_image > out.span_dim;

  auto fact = [&](const std::string& name, bool holds, const std::string& detail) {
    out.facts.push_back(ProbeFact{name, holds, detail});
  };
  {
    std::ostringstream os;
    os << "all six permuted products lie in the third radical power";
    fact("a", all_in_cube, os.str());
  }
  {
    std::ostringstream os;
    os << "the product images span " << out.span_dim
       << " dimensions, within the class-two bound of four";
    fact("b", out.span_dim <= 4, os.str());
  }
  {
    std::ostringstream os;
    os << distinct_with_image << " distinct values carry a nonzero image against capacity "
       << out.span_dim
       << "; a filtered multiplicative basis holding the three elements needs them independent";
    fact("c", distinct_with_image <= out.span_dim, os.str());
  }
  {
    std::ostringstream os;
    if (out.collision_groups.empty()) {
      os << "all six orderings produce pairwise distinct products";
    } else {
      os << "orderings collapse into " << out.collision_groups.size()
         << " shared-value groups; any basis holding the three elements must reuse one member"
            " per group";
    }
    fact("d", !out.collision_groups.empty(), os.str());
  }
  {
    std::ostringstream os;
    os << "distinct product values stay distinct modulo the fourth radical power";
    fact("e", distinct_mod4, os.str());
  }

  std::ostringstream st;
  st << "six ordered products collapse to " << out.distinct_nonzero
     << " distinct nonzero values spanning " << out.span_dim << " dimensions modulo the fourth"
     << " radical power";
  if (!out.collision_groups.empty()) {
    st << "; forced collisions:";
    for (const auto& g : out.collision_groups) {
      st << " {";
      for (size_t k = 0; k < g.size(); ++k) {
        if (k) st << ", ";
        const auto& ord = out.orderings[static_cast<size_t>(g[k])];
        st << "r" << ord[0] << " r" << ord[1] << " r" << ord[2];
      }
      st << "}";
    }
  }
  st << (out.contradiction
             ? "; the counts exceed what independent members allow for these representatives"
             : "; the counts are consistent for these representatives");
  st << " (evidence about the chosen elements only, not a nonexistence proof)";
  out.statement = st.str();
  return out;
}

// ---- rigidity certificate -------------------------------------------------

namespace {

struct LevelCheck {
  bool contradiction = false;
  bool contaminated = false;  // some pair value vanishes or sinks into R^3
  std::string detail;
};

}  // namespace

HeisenbergCertificate certify_heisenberg_type(const RestrictedLieAlgebra& L) {
  HeisenbergCertificate out;
  auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
    out.stages.push_back(HeisenbergStage{name, ok, detail});
    return ok;
  };

  if (!stage("restricted structure", validate_restricted(L).empty(),
             "the bracket and power tables satisfy the restricted axioms"))
    return out;
  if (!stage("prime field", L.field.kind() == FieldKind::Prime,
             "image enumeration needs a finite coefficient field"))
    return out;
  LieSeries S = lie_series(L);
  if (!stage("class two", S.nilpotency_class <= 2,
             "pair and triple product values must be determined by depth-one images"))
    return out;
  Envelope E = build_envelope(L);
  int t = 0;
  for (int h : E.heights)
    if (h == 1) ++t;
  {
    std::ostringstream os;
    os << "the first chain layer is " << t << "-dimensional";
    if (!stage("two generators", t == 2, os.str())) return out;
  }
  out.applicable = true;

  const Field& F = L.field;
  uint32_t p = F.p();
  const AugmentedAlgebra& U = E.algebra;
  const RadicalFiltration& fil = U.filtration();
  int L2 = fil.dim_power(2) - fil.dim_power(std::min(3, fil.nilindex()));
  int L3 = fil.nilindex() >= 3
               ? fil.dim_power(3) - fil.dim_power(std::min(4, fil.nilindex()))
               : 0;
  const Subspace& R3 = fil.power(std::min(3, fil.nilindex()));
  const Subspace& R4 = fil.power(std::min(4, fil.nilindex()));

  // the two depth-one sections behind an image (a, b): a s0 + b s1 where s0,
  // s1 embed the height-one members of the adapted chain basis
  std::vector<Vec> sections;
  for (int k = 0; k < 2; ++k) sections.push_back(E.embed(E.input_from_adapted[static_cast<size_t>(k)]));
  const Algebra& alg = U.alg();
  auto section_of = [&](uint32_t a, uint32_t b) {
    return vec_add(F, vec_scale(F, F.from_int(static_cast<int64_t>(a)), sections[0]),
                   vec_scale(F, F.from_int(static_cast<int64_t>(b)), sections[1]));
  };

  // counts distinct nonzero residues and their rank; residues of congruent
  // elements coincide because the row reduction is canonical
  auto layer_supply = [&](const std::vector<Vec>& values, const Subspace& below) {
    std::vector<Vec> residues;
    Subspace span(F, U.dim());
    for (const Vec& v : values) {
      Vec r = below.reduce(v);
      if (is_zero_vec(F, r)) continue;
      bool seen = false;
      for (const Vec& other : residues)
        if (other == r) seen = true;
      if (!seen) {
        span.insert(r);
        residues.push_back(std::move(r));
      }
    }
    return std::pair<int, int>{static_cast<int>(residues.size()), span.dim()};
  };

  auto run_pair = [&](const Vec& g0, const Vec& g1) {
    LevelCheck out_check;
    std::vector<Vec> gens = {g0, g1};
    // level two: the four ordered pair products. Their residues modulo the
    // third power ignore the lifts, because a lift correction multiplies in at
    // height three or deeper. Distinct members outside the third power stay
    // distinct modulo it, so the layer-two members of any candidate basis are
    // exactly these residues: their count and rank must both equal the layer
    // dimension.
    std::vector<Vec> pair_values;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        pair_values.push_back(alg.mul(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]));
    for (const Vec& v : pair_values)
      if (is_zero_vec(F, v) || R3.contains(v)) out_check.contaminated = true;
    auto [d2, r2] = layer_supply(pair_values, R3);
    if (d2 != L2 || r2 != d2) {
      std::ostringstream os;
      os << "pair products supply " << d2 << " distinct layer-two residues of rank " << r2
         << ", but the layer needs exactly " << L2 << " independent members";
      out_check.contradiction = true;
      out_check.detail = os.str();
      return out_check;
    }
    if (out_check.contaminated) {
      // a pair product vanished or sank into the third power: with lifts it
      // may resurface as a deeper member, so the layer-three supply is no
      // longer determined by the images alone
      out_check.detail = "undecidable at the third layer: a pair product sinks below the"
                         " second layer and its depth depends on the lifts";
      return out_check;
    }
    // level three: the eight ordered triple products modulo the fourth power,
    // again lift-independent by the same height accounting
    std::vector<Vec> triples;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          triples.push_back(
              alg.mul(pair_values[static_cast<size_t>(i) * 2 + j], gens[static_cast<size_t>(k)]));
    auto [d3, r3] = layer_supply(triples, R4);
    if (d3 != L3 || r3 != d3) {
      std::ostringstream os;
      os << "triple products supply " << d3 << " distinct layer-three residues of rank " << r3
         << ", but the layer needs exactly " << L3 << " independent members";
      out_check.contradiction = true;
      out_check.detail = os.str();
    }
    return out_check;
  };

  uint64_t refuted2 = 0, refuted3 = 0, contaminated = 0;
  // unordered pairs of independent image vectors in F_p^2; unordered is
  // enough because every product count below is symmetric in the two members
  std::vector<std::pair<uint32_t, uint32_t>> images;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      if (a || b) images.emplace_back(a, b);
  for (size_t x = 0; x < images.size(); ++x)
    for (size_t y = x + 1; y < images.size(); ++y) {
      uint64_t det = (static_cast<uint64_t>(images[x].first) * images[y].second) % p;
      uint64_t det2 = (static_cast<uint64_t>(images[x].second) * images[y].first) % p;
      if (det == det2) continue;  // dependent images
      ++out.pairs_checked;
      LevelCheck c = run_pair(section_of(images[x].first, images[x].second),
                              section_of(images[y].first, images[y].second));
      if (c.contradiction) {
        if (c.detail.find("pair products") != std::string::npos)
          ++refuted2;
        else
          ++refuted3;
      } else {
        ++out.pairs_surviving;
        if (c.contaminated) ++contaminated;
      }
    }

  {
    std::ostringstream os;
    os << out.pairs_checked << " image pairs examined: " << refuted2
       << " fail at the second layer, " << refuted3 << " at the third, "
       << out.pairs_surviving << " remain possible (" << contaminated
       << " undecidable from images alone)";
    stage("image pair enumeration", true, os.str());
  }
  out.refuted = out.applicable && out.pairs_checked > 0 && out.pairs_surviving == 0;
  if (out.refuted) {
    out.verdict =
        "no filtered multiplicative basis exists: every admissible depth-one image pair"
        " fails the layer supply counts, and the counts do not depend on the lifts";
  } else if (out.applicable) {
    out.verdict = "inconclusive: some depth-one image pairs stay consistent";
  } else {
    out.verdict = "not applicable to this algebra";
  }
  return out;
}

}  // namespace fmb

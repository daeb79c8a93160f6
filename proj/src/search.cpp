#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "fmb/mbasis.hpp"

namespace fmb {

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

uint64_t sat_pow(uint64_t q, uint64_t e) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    r = sat_mul(r, q);
    if (r == UINT64_MAX) return r;
  }
  return r;
}

// structure constants flattened to residues for tight closure loops
struct FlatAlgebra {
  int n = 0;
  uint64_t p = 2;
  std::vector<uint32_t> start;  // n*n + 1 prefix offsets into tk/tc
  std::vector<uint32_t> tk, tc;

  static FlatAlgebra from(const Algebra& A) {
    FlatAlgebra f;
    f.n = A.dim;
    f.p = A.field.p();
    f.start.assign(static_cast<size_t>(A.dim) * A.dim + 1, 0);
    size_t cell = 0;
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j, ++cell) {
        f.start[cell] = static_cast<uint32_t>(f.tk.size());
        for (const auto& [k, c] : A.table(i, j)) {
          if (c.res() == 0) continue;
          f.tk.push_back(static_cast<uint32_t>(k));
          f.tc.push_back(c.res());
        }
      }
    f.start[cell] = static_cast<uint32_t>(f.tk.size());
    return f;
  }

  // out = a * b; products are accumulated in 64 bits and reduced once
  void mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
           std::vector<uint64_t>& acc, std::vector<uint32_t>& out) const {
    std::fill(acc.begin(), acc.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (!a[static_cast<size_t>(i)]) continue;
      const size_t row = static_cast<size_t>(i) * n;
      const uint64_t ai = a[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j) {
        if (!b[static_cast<size_t>(j)]) continue;
        uint64_t c = ai * b[static_cast<size_t>(j)] % p;
        if (!c) continue;
        for (uint32_t t = start[row + static_cast<size_t>(j)];
             t < start[row + static_cast<size_t>(j) + 1]; ++t)
          acc[tk[t]] += c * tc[t];
      }
    }
    for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] = static_cast<uint32_t>(acc[static_cast<size_t>(k)] % p);
  }
};

// row echelon over F_p used only as an independence test
struct FlatEchelon {
  int n = 0;
  uint64_t p = 2;
  std::vector<std::vector<uint32_t>> rows;  // leading coefficient normalized to 1
  std::vector<int> leads;

  FlatEchelon(int n_, uint64_t p_) : n(n_), p(p_) {}

  // true when v extends the span (and was absorbed); false when dependent
  bool insert(std::vector<uint32_t> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t c = v[static_cast<size_t>(leads[r])];
      if (!c) continue;
      const auto& row = rows[r];
      for (int k = leads[r]; k < n; ++k) {
        if (!row[static_cast<size_t>(k)]) continue;
        uint64_t sub = static_cast<uint64_t>(c) * row[static_cast<size_t>(k)] % p;
        uint64_t val = v[static_cast<size_t>(k)] + p - sub;
        v[static_cast<size_t>(k)] = static_cast<uint32_t>(val >= p ? val - p : val);
      }
    }
    int lead = -1;
    for (int k = 0; k < n; ++k)
      if (v[static_cast<size_t>(k)]) {
        lead = k;
        break;
      }
    if (lead < 0) return false;
    uint64_t inv = fp_inv(static_cast<uint32_t>(p), v[static_cast<size_t>(lead)]);
    for (int k = lead; k < n; ++k)
      v[static_cast<size_t>(k)] = static_cast<uint32_t>(v[static_cast<size_t>(k)] * inv % p);
    rows.push_back(std::move(v));
    leads.push_back(lead);
    return true;
  }
};

uint64_t flat_hash(const std::vector<uint32_t>& v) {
  uint64_t h = 1469598103934665603ULL;
  for (uint32_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

// left-multiplication closure of the generators with hard aborts; fills
// `values` (radical members in discovery order) and reports success
bool flat_closure(const FlatAlgebra& FA, const std::vector<std::vector<uint32_t>>& gens,
                  std::vector<std::vector<uint32_t>>& values) {
  const int cap = FA.n - 1;  // everything except the unit
  values.clear();
  std::map<uint64_t, std::vector<int>> seen;
  FlatEchelon ech(FA.n, FA.p);
  std::vector<uint64_t> acc(static_cast<size_t>(FA.n));
  std::vector<uint32_t> prod(static_cast<size_t>(FA.n));

  auto add = [&](const std::vector<uint32_t>& v) -> int {
    // 0 = known or zero, 1 = added, -1 = abort
    bool zero = true;
    for (uint32_t x : v)
      if (x) {
        zero = false;
        break;
      }
    if (zero) return 0;
    uint64_t h = flat_hash(v);
    auto it = seen.find(h);
    if (it != seen.end())
      for (int idx : it->second)
        if (values[static_cast<size_t>(idx)] == v) return 0;
    if (static_cast<int>(values.size()) >= cap) return -1;  // too many members
    if (!ech.insert(v)) return -1;                          // dependent value
    seen[h].push_back(static_cast<int>(values.size()));
    values.push_back(v);
    return 1;
  };

  for (const auto& g : gens)
    if (add(g) < 0) return false;
  for (size_t at = 0; at < values.size(); ++at) {
    for (const auto& g : gens) {
      FA.mul(g, values[at], acc, prod);
      if (add(prod) < 0) return false;
    }
  }
  return static_cast<int>(values.size()) == cap;
}

}  // namespace

SearchOutcome closure_search_fmb(const AugmentedAlgebra& A, const SearchOptions& opt) {
  const Field& F = A.field();
  if (F.kind() != FieldKind::Prime)
    throw std::invalid_argument("the closure search needs a prime coefficient field");
  const RadicalFiltration& fil = A.filtration();
  if (fil.dim_power(1) != A.dim() - 1)
    throw std::invalid_argument("the closure search needs a local algebra");

  SearchOutcome out;
  if (A.dim() == 1) {
    FmbVerifyReport rep = verify_fmb(A, {A.alg().unit});
    out.status = SearchStatus::found;
    out.cert = rep.cert;
    out.exhaustive = true;
    return out;
  }

  const uint64_t q = F.p();
  std::vector<Vec> sections = quotient_reps(fil.power(1), fil.power(2));
  const std::vector<Vec>& lift_rows = fil.power(2).rows();
  const int t = static_cast<int>(sections.size());
  const int r2 = static_cast<int>(lift_rows.size());
  if (t == 0) throw std::logic_error("a local algebra of dimension > 1 has depth-1 elements");

  FlatAlgebra FA = FlatAlgebra::from(A.alg());
  auto flatten = [&](const Vec& v) {
    std::vector<uint32_t> f(static_cast<size_t>(FA.n));
    for (int k = 0; k < FA.n; ++k) f[static_cast<size_t>(k)] = v[static_cast<size_t>(k)].res();
    return f;
  };
  std::vector<std::vector<uint32_t>> flat_sections, flat_lifts;
  for (const Vec& s : sections) flat_sections.push_back(flatten(s));
  for (const Vec& r : lift_rows) flat_lifts.push_back(flatten(r));

  // image codes: nonzero vectors of F_q^t as base-q digit strings; under the
  // rescale normalization only vectors whose lowest nonzero digit is 1 remain
  auto code_digits = [&](uint64_t code) {
    std::vector<uint32_t> d(static_cast<size_t>(t));
    for (int k = 0; k < t; ++k) {
      d[static_cast<size_t>(k)] = static_cast<uint32_t>(code % q);
      code /= q;
    }
    return d;
  };
  auto code_allowed = [&](uint64_t code) {
    if (code == 0) return false;
    if (!opt.rescale_canonical) return true;
    uint64_t c = code;
    while (c % q == 0) c /= q;
    return c % q == 1;
  };
  const uint64_t code_count = sat_pow(q, static_cast<uint64_t>(t));

  // a candidate generator from an image and a lift
  std::vector<uint64_t> acc(static_cast<size_t>(FA.n));
  auto build_gen = [&](const std::vector<uint32_t>& image, const std::vector<uint32_t>& lift) {
    std::vector<uint32_t> g(static_cast<size_t>(FA.n), 0);
    for (int k = 0; k < t; ++k) {
      if (!image[static_cast<size_t>(k)]) continue;
      const auto& s = flat_sections[static_cast<size_t>(k)];
      for (int c = 0; c < FA.n; ++c)
        g[static_cast<size_t>(c)] = static_cast<uint32_t>(
            (g[static_cast<size_t>(c)] +
             static_cast<uint64_t>(image[static_cast<size_t>(k)]) * s[static_cast<size_t>(c)]) %
            FA.p);
    }
    for (int l = 0; l < r2; ++l) {
      if (!lift[static_cast<size_t>(l)]) continue;
      const auto& r = flat_lifts[static_cast<size_t>(l)];
      for (int c = 0; c < FA.n; ++c)
        g[static_cast<size_t>(c)] = static_cast<uint32_t>(
            (g[static_cast<size_t>(c)] +
             static_cast<uint64_t>(lift[static_cast<size_t>(l)]) * r[static_cast<size_t>(c)]) %
            FA.p);
    }
    return g;
  };

  auto finish_found = [&](const std::vector<std::vector<uint32_t>>& gens,
                          const std::vector<std::vector<uint32_t>>& values) -> bool {
    auto lift_vec = [&](const std::vector<uint32_t>& f) {
      Vec v(static_cast<size_t>(FA.n));
      for (int k = 0; k < FA.n; ++k)
        v[static_cast<size_t>(k)] = F.from_int(static_cast<int64_t>(f[static_cast<size_t>(k)]));
      return v;
    };
    std::vector<Vec> members;
    members.push_back(A.alg().unit);
    for (const auto& fv : values) members.push_back(lift_vec(fv));
    FmbVerifyReport rep = verify_fmb(A, members);
    if (!rep.ok) return false;  // closure success must survive the exact check
    out.status = SearchStatus::found;
    out.cert = std::move(rep.cert);
    for (const auto& g : gens) out.generators.push_back(lift_vec(g));
    return true;
  };

  // ---- exhaustive enumeration when the candidate space fits the budget ----
  // candidates = independent image tuples (ascending codes) x lifts per member
  uint64_t tuple_count = 0;
  {
    std::vector<uint64_t> chosen;
    std::vector<std::vector<uint32_t>> imgs;
    auto count_rec = [&](auto&& self, uint64_t next_code) -> bool {
      if (static_cast<int>(chosen.size()) == t) {
        ++tuple_count;
        return tuple_count <= opt.budget;
      }
      for (uint64_t code = next_code; code < code_count; ++code) {
        if (!code_allowed(code)) continue;
        auto d = code_digits(code);
        FlatEchelon ech(t, q);
        bool ok = true;
        for (const auto& img : imgs) ok = ok && ech.insert(img);
        ok = ok && ech.insert(d);
        if (!ok) continue;
        chosen.push_back(code);
        imgs.push_back(d);
        bool go = self(self, code + 1);
        imgs.pop_back();
        chosen.pop_back();
        if (!go) return false;
      }
      return true;
    };
    if (!count_rec(count_rec, 1)) tuple_count = UINT64_MAX;
  }
  uint64_t lift_space = sat_pow(q, static_cast<uint64_t>(r2) * t);
  uint64_t total = sat_mul(tuple_count, lift_space);

  std::vector<std::vector<uint32_t>> gens(static_cast<size_t>(t)), values;
  if (total <= opt.budget) {
    bool found = false;
    std::vector<std::vector<uint32_t>> imgs;
    std::vector<uint32_t> lift_digits(static_cast<size_t>(r2) * t, 0);
    auto run_tuple = [&]() -> bool {  // true = stop (found)
      std::fill(lift_digits.begin(), lift_digits.end(), 0);
      while (true) {
        for (int k = 0; k < t; ++k) {
          std::vector<uint32_t> lift(lift_digits.begin() + static_cast<long>(k) * r2,
                                     lift_digits.begin() + static_cast<long>(k + 1) * r2);
          gens[static_cast<size_t>(k)] = build_gen(imgs[static_cast<size_t>(k)], lift);
        }
        ++out.candidates_tried;
        if (flat_closure(FA, gens, values) && finish_found(gens, values)) return true;
        int pos = 0;
        while (pos < static_cast<int>(lift_digits.size())) {
          if (++lift_digits[static_cast<size_t>(pos)] < q) break;
          lift_digits[static_cast<size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == static_cast<int>(lift_digits.size())) return false;
      }
    };
    auto enum_rec = [&](auto&& self, uint64_t next_code) -> bool {
      if (static_cast<int>(imgs.size()) == t) return run_tuple();
      for (uint64_t code = next_code; code < code_count; ++code) {
        if (!code_allowed(code)) continue;
        auto d = code_digits(code);
        FlatEchelon ech(t, q);
        bool ok = true;
        for (const auto& img : imgs) ok = ok && ech.insert(img);
        ok = ok && ech.insert(d);
        if (!ok) continue;
        imgs.push_back(d);
        bool stop = self(self, code + 1);
        imgs.pop_back();
        if (stop) return true;
      }
      return false;
    };
    found = enum_rec(enum_rec, 1);
    if (found) return out;
    // the full space was covered only when the rescale normalization kept
    // every candidate (it is the identity over F_2)
    if (q == 2 || !opt.rescale_canonical) {
      out.status = SearchStatus::none_exhaustive;
      out.exhaustive = true;
    } else {
      out.status = SearchStatus::none_budget;
    }
    return out;
  }

  // ---- random sampling ----------------------------------------------------
  std::mt19937_64 rng(opt.seed);
  auto rand_mod = [&](uint64_t m) { return static_cast<uint32_t>(rng() % m); };
  std::vector<std::vector<uint32_t>> imgs(static_cast<size_t>(t));
  std::vector<uint32_t> lift(static_cast<size_t>(r2));
  for (uint64_t s = 0; s < opt.budget; ++s) {
    // draw an independent image tuple
    while (true) {
      FlatEchelon ech(t, q);
      bool ok = true;
      for (int k = 0; k < t; ++k) {
        auto& img = imgs[static_cast<size_t>(k)];
        img.assign(static_cast<size_t>(t), 0);
        bool nonzero = false;
        while (!nonzero) {
          for (int c = 0; c < t; ++c) {
            img[static_cast<size_t>(c)] = rand_mod(q);
            if (img[static_cast<size_t>(c)]) nonzero = true;
          }
        }
        if (opt.rescale_canonical) {
          // scale so the lowest nonzero coordinate becomes 1
          for (int c = 0; c < t; ++c)
            if (img[static_cast<size_t>(c)]) {
              uint64_t inv = fp_inv(static_cast<uint32_t>(q), img[static_cast<size_t>(c)]);
              for (int e = 0; e < t; ++e)
                img[static_cast<size_t>(e)] =
                    static_cast<uint32_t>(img[static_cast<size_t>(e)] * inv % q);
              break;
            }
        }
        ok = ok && ech.insert(img);
      }
      if (ok) break;
    }
    for (int k = 0; k < t; ++k) {
      for (int l = 0; l < r2; ++l) lift[static_cast<size_t>(l)] = rand_mod(q);
      gens[static_cast<size_t>(k)] = build_gen(imgs[static_cast<size_t>(k)], lift);
    }
    ++out.candidates_tried;
    if (flat_closure(FA, gens, values) && finish_found(gens, values)) return out;
  }
  out.status = SearchStatus::none_budget;
  return out;
}

}  // namespace fmb

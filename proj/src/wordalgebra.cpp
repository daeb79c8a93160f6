#include "fmb/wordalgebra.hpp"

namespace fmb {

std::string word_label(const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int g : w) s += static_cast<char>('x' + g);
  return s;
}

bool word_contains_factor(const std::vector<int>& w, const std::vector<int>& d) {
  if (d.empty() || d.size() > w.size()) return false;
  for (size_t s = 0; s + d.size() <= w.size(); ++s) {
    bool hit = true;
    for (size_t t = 0; t < d.size(); ++t)
      if (w[s + t] != d[t]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

WordAlgebra make_word_algebra(const Field& F, int gens, int maxlen,
                              const std::vector<std::vector<int>>& dead) {
  if (gens < 1 || maxlen < 1) throw std::invalid_argument("word algebra needs gens, maxlen >= 1");
  auto is_dead = [&](const std::vector<int>& w) {
    for (const auto& d : dead)
      if (word_contains_factor(w, d)) return true;
    return false;
  };
  WordAlgebra W;
  W.gens = gens;
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 0; len < maxlen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      if (static_cast<int>(w.size()) == len && !is_dead(w)) {
        W.index[w] = static_cast<int>(W.words.size());
        W.words.push_back(w);
      }
      if (static_cast<int>(w.size()) == len)
        for (int g = 0; g < gens; ++g) {
          auto u = w;
          u.push_back(g);
          next.push_back(std::move(u));
        }
    }
    layer = std::move(next);
  }
  int n = static_cast<int>(W.words.size());
  W.alg.field = F;
  W.alg.dim = n;
  W.alg.mult.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> w = W.words[i];
      w.insert(w.end(), W.words[j].begin(), W.words[j].end());
      auto it = W.index.find(w);
      if (it != W.index.end()) W.alg.set_table(i, j, {{it->second, F.one()}});
    }
  W.alg.unit = unit_vec(F, n, 0);
  for (const auto& w : W.words) W.alg.labels.push_back(word_label(w));
  W.eps = zero_vec(F, n);
  W.eps[0] = F.one();
  return W;
}

WordAlgebra make_truncated_poly(const Field& F, int d) { return make_word_algebra(F, 1, d); }

}  // namespace fmb

#pragma once
// Truncated free algebras: words over a finite alphabet modulo a length cut
// and an optional factor-closed set of dead words. Their word basis is
// multiplicative by construction, which makes them convenient oracles and the
// standard source of randomized quotient instances.

#include <map>
#include <string>
#include <vector>

#include "fmb/algebra.hpp"

namespace fmb {

struct WordAlgebra {
  Algebra alg;
  Vec eps;  // dual of the empty word
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> index;  // surviving word -> basis position
  int gens = 0;
};

// "1" for the empty word, otherwise letters x, y, z, ...
std::string word_label(const std::vector<int>& w);

// does w contain d as a contiguous factor? (empty d never matches)
bool word_contains_factor(const std::vector<int>& w, const std::vector<int>& d);

// all words of length < maxlen over `gens` letters, ordered by (length, lex);
// words listed in `dead` (together with every word containing one of them as
// a contiguous factor) are removed
WordAlgebra make_word_algebra(const Field& F, int gens, int maxlen,
                              const std::vector<std::vector<int>>& dead = {});

// F[x]/(x^d) with basis 1, x, ..., x^{d-1}
WordAlgebra make_truncated_poly(const Field& F, int d);

}  // namespace fmb

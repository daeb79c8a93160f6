#pragma once
// Shared test fixtures. The word-algebra builders live in the library
// (fmb/wordalgebra.hpp); this header keeps the historical test-local names.

#include "fmb/wordalgebra.hpp"

namespace fmbtest {

using namespace fmb;

using fmb::make_truncated_poly;
using fmb::make_word_algebra;
using fmb::word_label;
using fmb::WordAlgebra;

}  // namespace fmbtest

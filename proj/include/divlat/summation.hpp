// summation.hpp — pairwise (tree) accumulation.
//
// Every measure is a sum over distribution entries; pairwise accumulation
// keeps the round-off growth at O(log n) ulp so the suite's 1e-12 slack
// floor stays meaningful for large n.
#pragma once

#include <cstddef>

#include "divlat/rational.hpp"

namespace divlat {

// Sums term(i) for i in [lo, hi) as a balanced tree.
template <typename Term>
real pairwise_sum_range(std::size_t lo, std::size_t hi, Term&& term) {
  const std::size_t n = hi - lo;
  if (n <= 8) {
    real acc = 0.0L;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum_range(lo, mid, term) + pairwise_sum_range(mid, hi, term);
}

template <typename Term>
real pairwise_sum(std::size_t n, Term&& term) {
  return pairwise_sum_range(0, n, term);
}

}  // namespace divlat

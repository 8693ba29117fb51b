#pragma once

#include <cstdint>
#include <vector>

#include "hypertree/errors.hpp"

namespace hypertree {

/// Exact binomial coefficient; throws OverflowError beyond 64 bits.
inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX)
      throw OverflowError("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// True when binom(n,r) <= cap, without ever overflowing. The partial
/// products of the multiplicative formula are themselves binomial
/// coefficients, so they grow monotonically and permit an early exit.
inline bool binomial_within(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return true;  // binom = 0
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > cap) return false;
  }
  return true;
}

/// Calls f once for every r-subset of {0,...,n-1}, ascending within a
/// subset, subsets in lexicographic order.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    f(const_cast<const std::vector<int>&>(pick));
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace hypertree

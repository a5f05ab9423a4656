#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>

#include "dio/integer.hpp"

namespace dio {

/// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Advance `c` (sorted k-subset of [0, n)) to its colexicographic successor.
/// Returns false after the last subset.
inline bool next_colex(IndexSet& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

/// Calls fn(subset) for every k-subset of [0, n) in colex order; stops early
/// when fn returns false. Returns false iff stopped early.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  IndexSet c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  do {
    if (!fn(static_cast<const IndexSet&>(c))) return false;
  } while (next_colex(c, n));
  return true;
}

} // namespace dio

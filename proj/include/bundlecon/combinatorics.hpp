#pragma once

#include <cstddef>
#include <vector>

namespace bundlecon {

/// All k-subsets of {0..n-1}, each ascending, in lexicographic order.
inline std::vector<std::vector<std::size_t>> allCombinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Calls fn(combination) for every k-subset of {first..n-1} whose smallest
/// element is `first`, in lexicographic order. Returning false stops early.
template <typename Fn>
bool forEachCombinationStartingAt(std::size_t n, std::size_t k, std::size_t first, Fn&& fn) {
  if (k == 0 || first >= n || n - first < k) return true;
  std::vector<std::size_t> cur(k);
  cur[0] = first;
  for (std::size_t i = 1; i < k; ++i) cur[i] = first + i;
  while (true) {
    if (!fn(cur)) return false;
    std::size_t i = k;
    while (i > 1 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 1) return true;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace bundlecon

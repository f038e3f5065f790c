#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace tcd {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Calls fn on every t-subset of {1..n} in lexicographic order.
template <typename F>
void for_each_subset(int n, int t, F&& fn) {
  if (t < 0 || t > n) return;
  std::vector<int> cur(t);
  for (int i = 0; i < t; ++i) cur[i] = i + 1;
  while (true) {
    fn(const_cast<const std::vector<int>&>(cur));
    int i = t - 1;
    while (i >= 0 && cur[i] == n - (t - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace tcd

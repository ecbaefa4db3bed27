#pragma once

// Small independent reference implementations. They use plain integers and
// nested loops so they share no code with the library under test.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using EdgeList = std::vector<std::pair<int, int>>;

inline bool independent(Mask s, const EdgeList& edges) {
  for (auto [u, v] : edges) {
    if ((s >> (u - 1) & 1) && (s >> (v - 1) & 1)) return false;
  }
  return true;
}

inline std::vector<Mask> independent_sets(int n, const EdgeList& edges) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (independent(s, edges)) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> maximal_independent_sets(int n, const EdgeList& edges) {
  std::vector<Mask> out;
  for (Mask s : independent_sets(n, edges)) {
    bool maximal = true;
    for (int v = 1; v <= n && maximal; ++v) {
      if (!(s >> (v - 1) & 1) && independent(s | (Mask{1} << (v - 1)), edges)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Does some pair of disjoint independent sets cover each block up to one vertex and
/// meet every block in at least floor((|V_j|+1)/2)-1 vertices?
inline int count_almost_fair_pairs(int n, const EdgeList& edges, const std::vector<Mask>& blocks) {
  auto ind = independent_sets(n, edges);
  int count = 0;
  for (std::size_t a = 0; a < ind.size(); ++a) {
    for (std::size_t b = a; b < ind.size(); ++b) {
      Mask s1 = ind[a], s2 = ind[b];
      if (s1 & s2) continue;
      if (a == b && s1 != 0) continue;
      bool ok = true;
      for (Mask blk : blocks) {
        int sz = popcount(blk);
        int quota = std::max(0, (sz + 1) / 2 - 1);
        if (popcount(s1 & blk) < quota || popcount(s2 & blk) < quota) ok = false;
        if (popcount(blk & ~(s1 | s2)) > 1) ok = false;
      }
      if (ok) ++count;
    }
  }
  return count;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

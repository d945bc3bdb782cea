#pragma once

// Brute-force reference computations shared by the test suites.

#include <cstdint>
#include <vector>

#include "rnaposet/diagram.hpp"
#include "rnaposet/matrix.hpp"

namespace oracle {

inline bool pairs_cross(int a, int b, int c, int d) { return (a < c && c < b && b < d) || (c < a && a < d && d < b); }

// No k+1 pairwise crossing index pairs, by exhaustive search over small sets.
inline bool noncrossing(const std::vector<std::pair<int, int>>& pairs, int k) {
  const int n = static_cast<int>(pairs.size());
  std::vector<int> pick;
  auto grow = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(pick.size()) == k + 1) return true;
    for (int i = from; i < n; ++i) {
      bool ok = true;
      for (int j : pick)
        ok = ok && pairs_cross(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second);
      if (!ok) continue;
      pick.push_back(i);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !grow(grow, 0);
}

// Size of M^r_{m,k} by looping over every symmetric assignment with entries <= r+1.
inline std::size_t matrix_family_size(int m, int k, int r) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (!(i == 1 && j == m)) slots.push_back({i, j});
  std::vector<int> value(slots.size(), 0);
  std::size_t count = 0;
  while (true) {
    std::size_t at = 0;
    while (at < value.size() && value[at] == r + 1) value[at++] = 0;
    if (at == value.size()) break;
    ++value[at];
    int p = 0, q = 0;
    std::vector<std::pair<int, int>> nonzero;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (value[s] == 0) continue;
      nonzero.push_back(slots[s]);
      p += value[s] > 1 ? value[s] - 1 : 0;
      if (slots[s].second == slots[s].first + 1) q += value[s];
    }
    if (p + q <= r && noncrossing(nonzero, k)) ++count;
  }
  return count;
}

// Number of nonempty k-noncrossing sets of arcs on n sites.
inline std::size_t arc_subset_count(int n, int k) {
  std::vector<std::pair<int, int>> pool;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (b - a < n - 1) pool.push_back({a, b});
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) chosen.push_back(pool[i]);
    if (noncrossing(chosen, k)) ++count;
  }
  return count;
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// det[C_{m-i-j}], 1 <= i, j <= k, by fraction-free elimination.
inline long long hankel_catalan(int m, int k) {
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = static_cast<long long>(catalan(m - (i + 1) - (j + 1)));
  long long prev = 1, sign = 1;
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace oracle

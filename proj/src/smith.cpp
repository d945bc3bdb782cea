#include "rnaposet/smith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rnaposet {

namespace {

struct Overflow {};

template <class Int>
Int mul_sub(const Int& a, const Int& q, const Int& b) {
  return a - q * b;
}

template <>
std::int64_t mul_sub(const std::int64_t& a, const std::int64_t& q, const std::int64_t& b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Overflow{};
  }
  return out;
}

template <class Int>
bool is_unit(const Int& v) {
  return v == 1 || v == -1;
}

template <class Int>
BigInt to_big(const Int& v) {
  return BigInt(v);
}

// Sparse elimination on unit pivots; the rest goes to the dense routine.
template <class Int>
SmithInvariants eliminate(const IntegerMatrix& m) {
  using Row = std::vector<std::pair<int, Int>>;
  std::vector<Row> rows(m.rows);
  for (const auto& e : m.entries) {
    if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols) {
      throw std::out_of_range("matrix entry outside the declared shape");
    }
    if (e.value != 0) rows[e.row].emplace_back(e.col, Int(e.value));
  }
  std::vector<std::vector<int>> col_rows(m.cols);
  for (int r = 0; r < m.rows; ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate coordinates.
    Row merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second += v;
      } else {
        merged.emplace_back(c, v);
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second == 0; }),
                 merged.end());
    row = std::move(merged);
    for (const auto& [c, v] : row) col_rows[c].push_back(r);
  }
  std::vector<bool> row_alive(m.rows, true);
  std::vector<bool> col_alive(m.cols, true);

  auto entry = [&](int r, int c) -> const Int* {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int key) { return p.first < key; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  };

  // Compacts col_rows[c] to the live rows that still hold column c.
  auto live_rows = [&](int c) -> std::vector<int>& {
    auto& list = col_rows[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](int r) { return !row_alive[r] || entry(r, c) == nullptr; }),
               list.end());
    return list;
  };

  SmithInvariants out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (!col_alive[c]) continue;
      auto& candidates = live_rows(c);
      if (candidates.empty()) {
        col_alive[c] = false;
        continue;
      }
      int pivot = -1;
      for (int r : candidates) {
        if (is_unit(*entry(r, c)) && (pivot < 0 || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      if (pivot < 0) continue;
      const Int pv = *entry(pivot, c);
      const std::vector<int> others = candidates;
      for (int r : others) {
        if (r == pivot) continue;
        const Int q = *entry(r, c) * pv;  // pv is a unit, so this is the exact quotient
        Row merged;
        merged.reserve(rows[r].size() + rows[pivot].size());
        std::size_t i = 0, j = 0;
        const auto& a = rows[r];
        const auto& b = rows[pivot];
        while (i < a.size() || j < b.size()) {
          if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            merged.push_back(a[i++]);
          } else if (i == a.size() || b[j].first < a[i].first) {
            Int v = mul_sub(Int(0), q, b[j].second);
            col_rows[b[j].first].push_back(r);
            merged.emplace_back(b[j].first, std::move(v));
            ++j;
          } else {
            Int v = mul_sub(a[i].second, q, b[j].second);
            if (v != 0) merged.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
          }
        }
        rows[r] = std::move(merged);
      }
      row_alive[pivot] = false;
      col_alive[c] = false;
      rows[pivot].clear();
      ++out.rank;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<int> live_r;
  std::vector<int> col_slot(m.cols, -1);
  int dense_cols = 0;
  for (int r = 0; r < m.rows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    live_r.push_back(r);
    for (const auto& [c, v] : rows[r])
      if (col_slot[c] < 0) col_slot[c] = dense_cols++;
  }
  if (!live_r.empty()) {
    std::vector<std::vector<BigInt>> dense(live_r.size(), std::vector<BigInt>(dense_cols));
    for (std::size_t i = 0; i < live_r.size(); ++i)
      for (const auto& [c, v] : rows[live_r[i]]) dense[i][col_slot[c]] = to_big(v);
    for (auto& d : dense_smith_diagonal(std::move(dense))) {
      ++out.rank;
      if (d > 1) out.torsion.push_back(d);
    }
  }
  return out;
}

}  // namespace

std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry by absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  // Turn the diagonal into a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

SmithInvariants smith_invariants(const IntegerMatrix& m) {
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Overflow&) {
    return eliminate<BigInt>(m);
  }
}

}  // namespace rnaposet

#include "rnaposet/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rnaposet/bitset.hpp"
#include "rnaposet/clique.hpp"
#include "rnaposet/errors.hpp"

namespace rnaposet {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("matrix order must be positive");
  entries_.assign(static_cast<std::size_t>(order) * order, 0);
}

std::size_t SymmetricMatrix::index(int i, int j) const {
  if (i < 1 || j < 1 || i > order_ || j > order_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside order " + std::to_string(order_));
  }
  return static_cast<std::size_t>(i - 1) * order_ + (j - 1);
}

void SymmetricMatrix::set(int i, int j, int value) {
  if (value < 0) throw std::invalid_argument("matrix entries must be nonnegative");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m < 1) throw std::invalid_argument("matrix must have at least one row");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (rows[i][j] < 0) {
        throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") is negative");
      }
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") breaks symmetry");
      }
    }
  }
  SymmetricMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) out.set(i + 1, j + 1, rows[i][j]);
  return out;
}

bool SymmetricMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool SymmetricMatrix::is_zero_one() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 1; });
}

std::vector<std::vector<int>> SymmetricMatrix::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int i = 1; i <= order_; ++i)
    for (int j = 1; j <= order_; ++j) out[i - 1][j - 1] = at(i, j);
  return out;
}

int p_value(const SymmetricMatrix& m) {
  int p = 0;
  for (int i = 1; i <= m.order(); ++i)
    for (int j = i + 1; j <= m.order(); ++j) p += std::max(0, m.at(i, j) - 1);
  return p;
}

int q_value(const SymmetricMatrix& m) {
  int q = 0;
  for (int i = 1; i < m.order(); ++i) q += m.at(i, i + 1);
  return q;
}

int r_value(const SymmetricMatrix& m) { return p_value(m) + q_value(m); }

bool index_pairs_cross(int a, int b, int c, int d) {
  const int lo1 = std::min(a, b), hi1 = std::max(a, b);
  const int lo2 = std::min(c, d), hi2 = std::max(c, d);
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

int max_crossing_entries(const SymmetricMatrix& m) {
  std::vector<std::pair<int, int>> support;
  for (int i = 1; i <= m.order(); ++i)
    for (int j = i + 1; j <= m.order(); ++j)
      if (m.at(i, j) > 0) support.emplace_back(i, j);
  std::vector<DynamicBitset> adjacency(support.size(), DynamicBitset(support.size()));
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (index_pairs_cross(support[a].first, support[a].second, support[b].first,
                            support[b].second)) {
        adjacency[a].set(b);
        adjacency[b].set(a);
      }
  return max_clique_size(adjacency);
}

bool is_k_noncrossing(const SymmetricMatrix& m, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return max_crossing_entries(m) <= k;
}

bool dominated_by(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) return false;
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::string MatrixFamily::describe() const {
  switch (kind) {
    case FamilyKind::zero_one:
      return "M_" + std::to_string(order);
    case FamilyKind::noncrossing:
      return "M_{" + std::to_string(order) + "," + std::to_string(k) + "}";
    case FamilyKind::tautology:
      return "M^" + std::to_string(r) + "_{" + std::to_string(order) + "," + std::to_string(k) +
             "}";
  }
  return "?";
}

namespace {

void check_family_parameters(const MatrixFamily& f) {
  if (f.order < 4) throw std::invalid_argument("matrix family needs order m >= 4");
  if (f.k < 1) throw std::invalid_argument("matrix family needs k >= 1");
  if (f.r < 0) throw std::invalid_argument("matrix family needs r >= 0");
}

bool zero_diagonal_and_rainbow(const SymmetricMatrix& m) {
  for (int i = 1; i <= m.order(); ++i)
    if (m.at(i, i) != 0) return false;
  return m.at(1, m.order()) == 0;
}

}  // namespace

bool belongs_to(const SymmetricMatrix& m, const MatrixFamily& family) {
  check_family_parameters(family);
  if (m.order() != family.order || m.is_zero() || !zero_diagonal_and_rainbow(m)) return false;
  switch (family.kind) {
    case FamilyKind::zero_one:
      return m.is_zero_one() && q_value(m) == 0;
    case FamilyKind::noncrossing:
      return m.is_zero_one() && q_value(m) == 0 && is_k_noncrossing(m, family.k);
    case FamilyKind::tautology:
      return r_value(m) <= family.r && is_k_noncrossing(m, family.k);
  }
  return false;
}

namespace {

struct Position {
  int i;
  int j;
  bool semi_diagonal;
};

std::vector<Position> admissible_positions(int m) {
  std::vector<Position> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      if (i == 1 && j == m) continue;
      out.push_back({i, j, j == i + 1});
    }
  return out;
}

// Contribution of an entry of value v to r(M).
int entry_cost(const Position& p, int v) {
  return std::max(0, v - 1) + (p.semi_diagonal ? v : 0);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

struct MatrixEnumerator {
  int m;
  int k;
  int r;
  std::vector<Position> positions;
  std::vector<int> values;
  std::vector<std::size_t> support;  // indices into positions, non-semi-diagonal only
  std::vector<SymmetricMatrix> out;

  bool crossing_ok(std::size_t candidate) const {
    // Adding `candidate` must not complete k+1 pairwise crossing entries.
    std::vector<std::size_t> neighbours;
    const auto& c = positions[candidate];
    for (auto s : support) {
      const auto& p = positions[s];
      if (index_pairs_cross(c.i, c.j, p.i, p.j)) neighbours.push_back(s);
    }
    if (static_cast<int>(neighbours.size()) < k) return true;
    std::vector<DynamicBitset> adjacency(neighbours.size(), DynamicBitset(neighbours.size()));
    for (std::size_t a = 0; a < neighbours.size(); ++a)
      for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
        const auto& pa = positions[neighbours[a]];
        const auto& pb = positions[neighbours[b]];
        if (index_pairs_cross(pa.i, pa.j, pb.i, pb.j)) {
          adjacency[a].set(b);
          adjacency[b].set(a);
        }
      }
    return max_clique_size(adjacency, k) < k;
  }

  void emit() {
    bool nonzero = false;
    SymmetricMatrix mat(m);
    for (std::size_t idx = 0; idx < positions.size(); ++idx) {
      if (values[idx] == 0) continue;
      nonzero = true;
      mat.set(positions[idx].i, positions[idx].j, values[idx]);
    }
    if (nonzero) out.push_back(std::move(mat));
  }

  void search(std::size_t idx, int budget) {
    if (idx == positions.size()) {
      emit();
      return;
    }
    const auto& pos = positions[idx];
    for (int v = 0;; ++v) {
      const int cost = entry_cost(pos, v);
      if (cost > budget) break;
      if (v == 1 && !pos.semi_diagonal) {
        if (!crossing_ok(idx)) break;
        support.push_back(idx);
      }
      values[idx] = v;
      search(idx + 1, budget - cost);
    }
    values[idx] = 0;
    if (!support.empty() && support.back() == idx) support.pop_back();
  }
};

}  // namespace

std::uint64_t predicted_matrix_search(int m, int r) {
  // ways[b] = assignments of the processed positions consuming exactly b units.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(r) + 1, 0);
  ways[0] = 1;
  for (const auto& pos : admissible_positions(m)) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int used = 0; used <= r; ++used) {
      if (ways[used] == 0) continue;
      for (int v = 0;; ++v) {
        const int cost = entry_cost(pos, v);
        if (used + cost > r) break;
        next[used + cost] = saturating_add(next[used + cost], ways[used]);
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = saturating_add(total, w);
  return total;
}

std::vector<SymmetricMatrix> enumerate_matrices(int m, int k, int r, std::uint64_t cap) {
  check_family_parameters(MatrixFamily::tautology(m, k, r));
  const std::uint64_t predicted = predicted_matrix_search(m, r);
  if (predicted > cap) {
    throw ResourceLimitError("enumerating M^" + std::to_string(r) + "_{" + std::to_string(m) +
                             "," + std::to_string(k) + "} needs up to " +
                             std::to_string(predicted) + " assignments, above the cap of " +
                             std::to_string(cap));
  }
  MatrixEnumerator e{m, k, r, admissible_positions(m), {}, {}, {}};
  e.values.assign(e.positions.size(), 0);
  e.search(0, r);
  std::sort(e.out.begin(), e.out.end());
  return std::move(e.out);
}

std::string matrix_key(const SymmetricMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= m.order(); ++i) {
    if (i > 1) os << ',';
    os << '[';
    for (int j = 1; j <= m.order(); ++j) {
      if (j > 1) os << ',';
      os << m.at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

nlohmann::json matrix_to_json(const SymmetricMatrix& m) {
  return nlohmann::json{{"order", m.order()}, {"rows", m.rows()}};
}

SymmetricMatrix matrix_from_json(const nlohmann::json& j) {
  if (j.is_array()) return matrix_from_json(nlohmann::json{{"rows", j}});
  if (!j.is_object() || !j.contains("rows")) {
    throw std::invalid_argument("matrix JSON needs a rows array or an object with \"rows\"");
  }
  const auto& rows_json = j.at("rows");
  if (!rows_json.is_array()) throw std::invalid_argument("\"rows\" must be an array");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < rows_json.size(); ++i) {
    const auto& row = rows_json[i];
    if (!row.is_array()) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " is not an array");
    }
    std::vector<int> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer()) {
        throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(c + 1) + ") is not an integer");
      }
      values.push_back(row[c].get<int>());
    }
    rows.push_back(std::move(values));
  }
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(rows.size())) {
    throw std::invalid_argument("\"order\" is " + std::to_string(j.at("order").get<int>()) +
                                " but " + std::to_string(rows.size()) + " rows were given");
  }
  return SymmetricMatrix::from_rows(rows);
}

}  // namespace rnaposet

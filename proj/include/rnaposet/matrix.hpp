#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace rnaposet {

// Nonnegative integral symmetric matrix. Indices are 1-based, so entry (i, j)
// is x_{i,j} with 1 <= i, j <= order().
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order);

  // Validates squareness, symmetry and nonnegativity; the error names the
  // first offending coordinate in row-major order.
  static SymmetricMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return order_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value);
  void add(int i, int j, int delta) { set(i, j, at(i, j) + delta); }

  bool is_zero() const;
  bool is_zero_one() const;
  std::vector<std::vector<int>> rows() const;
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;
  friend auto operator<=>(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int order_ = 0;
  std::vector<int> entries_;
};

// p(M): total excess over 1 of the entries strictly above the diagonal.
int p_value(const SymmetricMatrix& m);
// q(M): sum of the superdiagonal entries.
int q_value(const SymmetricMatrix& m);
// Tautology number r(M) = p(M) + q(M).
int r_value(const SymmetricMatrix& m);

// {a,b} and {c,d} cross when exactly one of c, d lies strictly between a and b
// and the four indices are distinct.
bool index_pairs_cross(int a, int b, int c, int d);

// Largest number of pairwise crossing nonzero entries (off the diagonal).
int max_crossing_entries(const SymmetricMatrix& m);
bool is_k_noncrossing(const SymmetricMatrix& m, int k);

// True iff a and b have the same order and a_{i,j} <= b_{i,j} everywhere.
bool dominated_by(const SymmetricMatrix& a, const SymmetricMatrix& b);

enum class FamilyKind {
  zero_one,    // M_m
  noncrossing, // M_{m,k}
  tautology,   // M^r_{m,k}
};

struct MatrixFamily {
  FamilyKind kind = FamilyKind::zero_one;
  int order = 4;
  int k = 1;
  int r = 0;

  static MatrixFamily zero_one(int m) { return {FamilyKind::zero_one, m, 1, 0}; }
  static MatrixFamily noncrossing(int m, int k) { return {FamilyKind::noncrossing, m, k, 0}; }
  static MatrixFamily tautology(int m, int k, int r) { return {FamilyKind::tautology, m, k, r}; }

  std::string describe() const;
};

// Throws std::invalid_argument on m < 4, k < 1 or r < 0.
bool belongs_to(const SymmetricMatrix& m, const MatrixFamily& family);

// Upper bound on the assignments the enumerator visits for order m and
// tautology bound r (noncrossing pruning ignored). Saturates at UINT64_MAX.
std::uint64_t predicted_matrix_search(int m, int r);

// Every member of M^r_{m,k}, sorted row-major lexicographically.
// Throws ResourceLimitError when predicted_matrix_search exceeds `cap`.
std::vector<SymmetricMatrix> enumerate_matrices(int m, int k, int r, std::uint64_t cap);

// Canonical text key, the rows as a JSON array: [[0,1],[1,0]].
std::string matrix_key(const SymmetricMatrix& m);

nlohmann::json matrix_to_json(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace rnaposet

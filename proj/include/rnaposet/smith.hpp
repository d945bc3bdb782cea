#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rnaposet {

using BigInt = boost::multiprecision::cpp_int;

struct Entry {
  int row;
  int col;
  std::int64_t value;
};

// Sparse integer matrix given by its nonzero entries.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;
};

struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors greater than 1, ascending
};

// Rank and nontrivial invariant factors of the Smith normal form.
SmithInvariants smith_invariants(const IntegerMatrix& m);

// Dense Smith normal form diagonal (invariant factors, zeros omitted).
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a);

}  // namespace rnaposet

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnaposet {

// Raised when a computation would exceed a configured size bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a relation handed to a poset constructor is not a partial order.
class PosetAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size bounds shared by the enumerators, poset builders and homology code.
struct Limits {
  std::size_t max_elements = 100000;             // poset elements
  std::size_t max_faces = 2000000;               // simplicial faces
  std::size_t max_matrix_search = 200000000;     // predicted matrix assignments
  std::size_t max_isomorphism_elements = 2000;   // blind isomorphism search
};

inline void require_within(std::size_t value, std::size_t cap, const std::string& what) {
  if (value > cap) {
    throw ResourceLimitError(what + " exceeds cap " + std::to_string(cap) + " (got " +
                             std::to_string(value) + ")");
  }
}

}  // namespace rnaposet

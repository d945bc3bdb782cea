#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rnaposet/diagram.hpp"
#include "rnaposet/errors.hpp"
#include "rnaposet/matrix.hpp"
#include "rnaposet/poset.hpp"
#include "rnaposet/transform.hpp"

namespace rnaposet {

// A poset whose element i carries items[i].
template <class T>
struct LabelledPoset {
  FinitePoset poset;
  std::vector<T> items;

  std::size_t size() const { return items.size(); }
};

// Arcs allowed in a diagram of length n, sorted.
std::vector<Arc> admissible_arcs(int n);

// S_{n,k}: non-trivial k-noncrossing diagrams of length n under inclusion.
LabelledPoset<Diagram> build_S(int n, int k, const Limits& limits = {});
// S^o_{m,k}: members of S_{m,k} whose arcs are all k-relevant.
LabelledPoset<Diagram> build_So(int m, int k, const Limits& limits = {});
// S^*_{m,k}: members of S_{m,k} without k-relevant arcs (empty for k = 1).
LabelledPoset<Diagram> build_Sstar(int m, int k, const Limits& limits = {});

// M^r_{m,k} under domination.
LabelledPoset<SymmetricMatrix> build_M(int m, int k, int r, const Limits& limits = {});

enum class POrder {
  transported,  // x <= y iff B(x) <= B(y)
  suppression,  // generated by single arc suppressions
};

// P^r_{f,k}: beta_inverse of every member of M^r_{f+1,k}.
LabelledPoset<Diagram> build_P(const PwParams& p, POrder order = POrder::transported,
                               const Limits& limits = {});
// D^r_{f,k}: all proper members, found by arc insertion from single-arc
// diagrams, ordered by suppression.
LabelledPoset<Diagram> build_D(const PwParams& p, const Limits& limits = {});

// Largest length of a member of D^r_{f,k}.
int length_bound(int f, int p);

// Orders generated by suppressions: y is below x when y = suppress(x, a).
std::vector<std::vector<std::size_t>> suppression_lower_neighbours(
    const std::vector<Diagram>& items, const std::vector<std::string>& keys);

}  // namespace rnaposet

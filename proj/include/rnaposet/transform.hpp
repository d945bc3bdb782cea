#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rnaposet/diagram.hpp"
#include "rnaposet/matrix.hpp"

namespace rnaposet {

// Exchanges the partners of sites s and s+1. Requires a proper diagram in
// which both sites support exactly one arc.
Diagram swap(const Diagram& d, int s);
bool is_strict_swap(const Diagram& d, int s);

struct CanonicalTrace {
  Diagram result;
  std::vector<int> swap_sites;
};

// Strict swaps at the leftmost crossing adjacent pair of the leftmost block
// carrying a local crossing, until no block does.
Diagram canonicalize(const Diagram& d);
CanonicalTrace canonicalize_traced(const Diagram& d);

bool equivalent(const Diagram& a, const Diagram& b);
bool equivalent_by_definition(const Diagram& a, const Diagram& b);
// Bijections between the arc sets matching arcs with equal covered free-site
// sets. Zero when the lengths differ.
std::uint64_t count_free_site_preserving_bijections(const Diagram& a, const Diagram& b);

Diagram dual(const Diagram& d);
Diagram blow_up(const Diagram& d);
// A proper diagram whose block matrix is m.
Diagram realize_matrix(const SymmetricMatrix& m);

struct PwParams {
  int f = 3;  // free sites
  int k = 1;  // noncrossing bound
  int r = 0;  // tautology bound

  std::string describe() const;
};

// Membership in D^r_{f,k}: proper, k-noncrossing, f free sites, tautology <= r.
bool in_proper_family(const Diagram& d, const PwParams& p);
// Membership in P^r_{f,k}: the regular members of D^r_{f,k}.
bool in_regular_family(const Diagram& d, const PwParams& p);
// Empty when d lies in P^r_{f,k}, otherwise the first failing condition.
std::string regular_family_violation(const Diagram& d, const PwParams& p);

SymmetricMatrix beta(const Diagram& d, const PwParams& p);
Diagram beta_inverse(const SymmetricMatrix& m, const PwParams& p);

SymmetricMatrix tau(const Diagram& d);
// The diagram of length m.order() with one arc per nonzero entry above the
// diagonal. Requires a member of M_m.
Diagram tau_inverse(const SymmetricMatrix& m);

struct Diagonal {
  int i = 0;
  int j = 0;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& d);
bool is_k_relevant(int i, int j, int m, int k);

Diagram theta(const std::vector<Diagonal>& face, int m, int k);
std::vector<Diagonal> theta_inverse(const Diagram& d, int k);

enum class Bottom { star, relevant };
using KappaComponent = std::variant<Bottom, Diagram>;

struct KappaValue {
  KappaComponent star;      // non-relevant arcs, or Bottom::star
  KappaComponent relevant;  // relevant arcs, or Bottom::relevant
};

// Splits a member of S_{m,k} into its non-k-relevant and k-relevant parts.
KappaValue kappa(const Diagram& d, int k);
std::string component_key(const KappaComponent& c);
// Union of the two parts. Throws when both are bottoms.
Diagram kappa_inverse(const KappaValue& v, int m);

}  // namespace rnaposet

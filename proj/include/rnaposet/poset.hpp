#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rnaposet/bitset.hpp"
#include "rnaposet/errors.hpp"

namespace rnaposet {

// Finite poset over elements 0..size()-1, each carrying a unique text key.
// The order is stored as dense up-set and down-set bitsets.
class FinitePoset {
 public:
  using Leq = std::function<bool(std::size_t, std::size_t)>;

  FinitePoset() = default;

  // Queries leq on every ordered pair, then checks the partial order axioms.
  static FinitePoset from_relation(std::vector<std::string> keys, const Leq& leq,
                                   std::size_t cap = Limits{}.max_elements);
  // ups[x] must hold every y with x <= y.
  static FinitePoset from_up_sets(std::vector<std::string> keys, std::vector<DynamicBitset> ups);
  // The order generated by y < x for each y in lower[x].
  static FinitePoset from_lower_neighbours(std::vector<std::string> keys,
                                           const std::vector<std::vector<std::size_t>>& lower);

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  const std::string& key(std::size_t x) const { return keys_.at(x); }
  const std::vector<std::string>& keys() const { return keys_; }
  std::optional<std::size_t> index_of(const std::string& key) const;

  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  const DynamicBitset& up_set(std::size_t x) const { return up_[x]; }
  const DynamicBitset& down_set(std::size_t x) const { return down_[x]; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  // Elements sorted by down-set size, a linear extension.
  std::vector<std::size_t> linear_extension() const;

 private:
  static FinitePoset finish(std::vector<std::string> keys, std::vector<DynamicBitset> ups);
  void index_keys();

  std::vector<std::string> keys_;
  std::vector<DynamicBitset> up_;
  std::vector<DynamicBitset> down_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Hasse diagram edges (lower, upper), sorted.
std::vector<std::pair<std::size_t, std::size_t>> cover_edges(const FinitePoset& p);
// Upper covers of each element.
std::vector<std::vector<std::size_t>> upper_covers(const FinitePoset& p);

struct ChainStatistics {
  std::size_t elements = 0;
  std::size_t cover_edges = 0;
  int rank_length = 0;       // edges in a longest chain
  int rank_cardinality = 0;  // elements in a longest chain
  int shortest_maximal_chain = 0;  // elements
  bool pure = true;
};

ChainStatistics chain_statistics(const FinitePoset& p);
int rank_length(const FinitePoset& p);
int rank_cardinality(const FinitePoset& p);
bool is_pure(const FinitePoset& p);

// Number of maximal chains, saturating at `cap` + 1.
std::size_t count_maximal_chains(const FinitePoset& p, std::size_t cap);

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& members);
FinitePoset open_interval_above(const FinitePoset& p, std::size_t x);
FinitePoset adjoin_bottom(const FinitePoset& p, const std::string& label);
// Element (i, j) has index i * q.size() + j and key "(a, b)".
FinitePoset direct_product(const FinitePoset& p, const FinitePoset& q);

// Witness f with x <= y iff f(x) <= f(y), or nullopt.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const FinitePoset& p, const FinitePoset& q,
    std::size_t cap = Limits{}.max_isomorphism_elements);
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q,
                   std::size_t cap = Limits{}.max_isomorphism_elements);

enum class MapKind { neither, homomorphism, isomorphism };
std::string to_string(MapKind kind);

struct OrderMapReport {
  MapKind kind = MapKind::neither;
  bool order_preserving = false;
  bool injective = false;
  bool surjective = false;
  bool order_reflecting = false;
  std::string counterexample;  // keys of a witnessing pair when a property fails
};

// f[x] is the image of element x of p in q.
OrderMapReport check_order_map(const std::vector<std::size_t>& f, const FinitePoset& p,
                               const FinitePoset& q, std::size_t cap = Limits{}.max_elements);

std::string to_dot(const FinitePoset& p, const std::string& name = "hasse");
std::string stats_report(const FinitePoset& p);

}  // namespace rnaposet

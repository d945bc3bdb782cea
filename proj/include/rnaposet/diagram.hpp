#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rnaposet/matrix.hpp"

namespace rnaposet {

struct Arc {
  int lo = 0;
  int hi = 0;

  int gap() const { return hi - lo; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// True iff a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi.
bool arcs_cross(const Arc& a, const Arc& b);

std::string to_string(const Arc& a);

// Sites 1..n plus arcs kept sorted lexicographically.
class Diagram {
 public:
  // Throws std::invalid_argument naming the offending arc when an arc breaks
  // 1 < hi - lo < n - 1, is listed twice, or uses a site outside 1..n.
  Diagram(int length, std::vector<Arc> arcs);

  static Diagram trivial(int length) { return Diagram(length, {}); }

  int length() const { return length_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  bool is_trivial() const { return arcs_.empty(); }
  bool contains(const Arc& a) const;

  // Number of arcs each site supports, indexed 1..n (slot 0 unused).
  std::vector<int> support_degrees() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int length_;
  std::vector<Arc> arcs_;
};

// Text form `n=<int>; arcs=(a,b),(c,d)`.
std::string to_string(const Diagram& d);
inline std::string diagram_key(const Diagram& d) { return to_string(d); }
Diagram parse_diagram(const std::string& text);

struct BlockDecomposition {
  std::vector<int> free_sites;
  std::vector<std::vector<int>> blocks;  // f + 1 entries, some possibly empty
  std::vector<int> block_index;          // per site 1..n: block number, 0 for free sites

  int block_of(int site) const { return block_index.at(site); }
  int free_count() const { return static_cast<int>(free_sites.size()); }
};

std::vector<int> free_sites(const Diagram& d);
BlockDecomposition block_list(const Diagram& d);

SymmetricMatrix block_matrix(const Diagram& d);
SymmetricMatrix adjacency_matrix(const Diagram& d);

bool is_binary(const Diagram& d);
bool is_proper(const Diagram& d);

int crossing_count(const Diagram& d);
int local_crossing_count(const Diagram& d);
bool is_regular(const Diagram& d);

int max_mutually_crossing(const Diagram& d);
bool is_k_noncrossing(const Diagram& d, int k);

enum class ArcKind { degenerate, tiny, ordinary };
std::string to_string(ArcKind kind);

// Free sites strictly between the endpoints of `a`.
std::vector<int> covered_free_sites(const Diagram& d, const Arc& a);
ArcKind classify_arc(const Diagram& d, const Arc& a);
// Arcs grouped by covered free-site set; groups ordered by their first arc.
std::vector<std::vector<Arc>> parallel_classes(const Diagram& d);

Diagram delete_arc(const Diagram& d, const Arc& a);
// Removes `a` and every endpoint of it left free, then relabels the sites.
Diagram suppress_arc(const Diagram& d, const Arc& a);

int tautology_number(const Diagram& d);

}  // namespace rnaposet

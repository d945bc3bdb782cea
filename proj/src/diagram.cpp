#include "rnaposet/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rnaposet/bitset.hpp"
#include "rnaposet/clique.hpp"

namespace rnaposet {

bool arcs_cross(const Arc& a, const Arc& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.lo) + "," + std::to_string(a.hi) + ")";
}

Diagram::Diagram(int length, std::vector<Arc> arcs) : length_(length), arcs_(std::move(arcs)) {
  if (length_ < 2) {
    throw std::invalid_argument("diagram length must be at least 2, got " +
                                std::to_string(length_));
  }
  for (const auto& a : arcs_) {
    if (a.lo < 1 || a.hi > length_ || a.lo >= a.hi) {
      throw std::invalid_argument("arc " + to_string(a) + " is not a pair a<b of sites in 1.." +
                                  std::to_string(length_));
    }
    if (a.gap() <= 1) {
      throw std::invalid_argument("arc " + to_string(a) + " joins adjacent sites");
    }
    if (a.gap() >= length_ - 1) {
      throw std::invalid_argument("arc " + to_string(a) + " is the rainbow arc (1," +
                                  std::to_string(length_) + ")");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw std::invalid_argument("arc " + to_string(*dup) + " is listed twice");
  }
}

bool Diagram::contains(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

std::vector<int> Diagram::support_degrees() const {
  std::vector<int> deg(length_ + 1, 0);
  for (const auto& a : arcs_) {
    ++deg[a.lo];
    ++deg[a.hi];
  }
  return deg;
}

std::string to_string(const Diagram& d) {
  std::string out = "n=" + std::to_string(d.length()) + "; arcs=";
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    if (i) out += ',';
    out += to_string(d.arcs()[i]);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool try_consume(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(const std::string& w) {
    skip_space();
    if (s_.compare(pos_, w.size(), w) != 0) fail("expected \"" + w + "\"");
    pos_ += w.size();
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) {
      fail("expected an integer");
    }
    try {
      return std::stoi(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse diagram \"" + s_ + "\": " + what + " at column " +
                                std::to_string(pos_ + 1));
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_diagram(const std::string& text) {
  Cursor c(text);
  c.expect_word("n");
  c.expect('=');
  const int n = c.integer();
  c.expect(';');
  c.expect_word("arcs");
  c.expect('=');
  std::vector<Arc> arcs;
  if (!c.at_end()) {
    do {
      c.expect('(');
      Arc a;
      a.lo = c.integer();
      c.expect(',');
      a.hi = c.integer();
      c.expect(')');
      arcs.push_back(a);
    } while (c.try_consume(','));
  }
  if (!c.at_end()) c.fail("unexpected trailing text");
  return Diagram(n, std::move(arcs));
}

std::vector<int> free_sites(const Diagram& d) {
  const auto deg = d.support_degrees();
  std::vector<int> out;
  for (int s = 1; s <= d.length(); ++s)
    if (deg[s] == 0) out.push_back(s);
  return out;
}

BlockDecomposition block_list(const Diagram& d) {
  BlockDecomposition out;
  out.free_sites = free_sites(d);
  out.blocks.assign(out.free_sites.size() + 1, {});
  out.block_index.assign(d.length() + 1, 0);
  std::size_t next_free = 0;
  for (int s = 1; s <= d.length(); ++s) {
    if (next_free < out.free_sites.size() && out.free_sites[next_free] == s) {
      ++next_free;
      continue;
    }
    out.blocks[next_free].push_back(s);
    out.block_index[s] = static_cast<int>(next_free) + 1;
  }
  return out;
}

SymmetricMatrix block_matrix(const Diagram& d) {
  const auto bl = block_list(d);
  SymmetricMatrix m(bl.free_count() + 1);
  for (const auto& a : d.arcs()) m.add(bl.block_of(a.lo), bl.block_of(a.hi), 1);
  return m;
}

SymmetricMatrix adjacency_matrix(const Diagram& d) {
  SymmetricMatrix m(d.length());
  for (const auto& a : d.arcs()) m.set(a.lo, a.hi, 1);
  return m;
}

bool is_binary(const Diagram& d) {
  if (d.is_trivial()) return false;
  const auto deg = d.support_degrees();
  return std::all_of(deg.begin(), deg.end(), [](int v) { return v <= 1; });
}

std::vector<int> covered_free_sites(const Diagram& d, const Arc& a) {
  std::vector<int> out;
  for (int s : free_sites(d))
    if (a.lo < s && s < a.hi) out.push_back(s);
  return out;
}

bool is_proper(const Diagram& d) {
  if (!is_binary(d)) return false;
  const auto fs = free_sites(d);
  for (const auto& a : d.arcs()) {
    const auto covered = std::count_if(fs.begin(), fs.end(),
                                       [&](int s) { return a.lo < s && s < a.hi; });
    if (covered == 0 || covered == static_cast<long>(fs.size())) return false;
  }
  return true;
}

int crossing_count(const Diagram& d) {
  int count = 0;
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) ++count;
  return count;
}

int local_crossing_count(const Diagram& d) {
  const auto bl = block_list(d);
  int count = 0;
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!arcs_cross(arcs[i], arcs[j])) continue;
      const int bi[2] = {bl.block_of(arcs[i].lo), bl.block_of(arcs[i].hi)};
      const int bj[2] = {bl.block_of(arcs[j].lo), bl.block_of(arcs[j].hi)};
      bool local = false;
      for (int x : bi)
        for (int y : bj) local = local || x == y;
      if (local) ++count;
    }
  }
  return count;
}

bool is_regular(const Diagram& d) { return is_binary(d) && local_crossing_count(d) == 0; }

int max_mutually_crossing(const Diagram& d) {
  const auto& arcs = d.arcs();
  std::vector<DynamicBitset> adjacency(arcs.size(), DynamicBitset(arcs.size()));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
  return max_clique_size(adjacency);
}

bool is_k_noncrossing(const Diagram& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return max_mutually_crossing(d) <= k;
}

std::string to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::degenerate:
      return "degenerate";
    case ArcKind::tiny:
      return "tiny";
    case ArcKind::ordinary:
      return "ordinary";
  }
  return "?";
}

namespace {

void require_arc(const Diagram& d, const Arc& a) {
  if (!d.contains(a)) {
    throw std::invalid_argument("arc " + to_string(a) + " is not in " + to_string(d));
  }
}

}  // namespace

ArcKind classify_arc(const Diagram& d, const Arc& a) {
  require_arc(d, a);
  const auto covered = covered_free_sites(d, a).size();
  if (covered == 0) return ArcKind::degenerate;
  if (covered == 1) return ArcKind::tiny;
  return ArcKind::ordinary;
}

std::vector<std::vector<Arc>> parallel_classes(const Diagram& d) {
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<std::vector<Arc>> out;
  for (const auto& a : d.arcs()) {
    auto key = covered_free_sites(d, a);
    auto [it, fresh] = slot.emplace(std::move(key), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(a);
  }
  return out;
}

Diagram delete_arc(const Diagram& d, const Arc& a) {
  require_arc(d, a);
  std::vector<Arc> rest;
  for (const auto& b : d.arcs())
    if (b != a) rest.push_back(b);
  return Diagram(d.length(), std::move(rest));
}

Diagram suppress_arc(const Diagram& d, const Arc& a) {
  require_arc(d, a);
  const auto deg = d.support_degrees();
  std::vector<int> relabel(d.length() + 1, 0);
  int next = 0;
  for (int s = 1; s <= d.length(); ++s) {
    const bool removed = (s == a.lo || s == a.hi) && deg[s] == 1;
    relabel[s] = removed ? 0 : ++next;
  }
  std::vector<Arc> rest;
  for (const auto& b : d.arcs())
    if (b != a) rest.push_back({relabel[b.lo], relabel[b.hi]});
  try {
    return Diagram(next, std::move(rest));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("suppressing " + to_string(a) + " in " + to_string(d) +
                                " leaves no valid diagram: " + e.what());
  }
}

int tautology_number(const Diagram& d) { return r_value(block_matrix(d)); }

}  // namespace rnaposet

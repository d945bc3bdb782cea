#include "rnaposet/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rnaposet {

void FinitePoset::index_keys() {
  index_.clear();
  index_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (!index_.emplace(keys_[i], i).second) {
      throw PosetAxiomError("duplicate element key " + keys_[i]);
    }
  }
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FinitePoset FinitePoset::finish(std::vector<std::string> keys, std::vector<DynamicBitset> ups) {
  FinitePoset p;
  p.keys_ = std::move(keys);
  p.index_keys();
  const std::size_t n = p.keys_.size();
  p.up_ = std::move(ups);
  p.down_.assign(n, DynamicBitset(n));
  for (std::size_t x = 0; x < n; ++x) p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });
  return p;
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> keys, const Leq& leq,
                                       std::size_t cap) {
  const std::size_t n = keys.size();
  require_within(n, cap, "poset element count");
  std::vector<DynamicBitset> ups(n, DynamicBitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(x, y)) ups[x].set(y);
  return from_up_sets(std::move(keys), std::move(ups));
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> keys,
                                      std::vector<DynamicBitset> ups) {
  const std::size_t n = keys.size();
  if (ups.size() != n) throw std::invalid_argument("one up-set per element is required");
  for (std::size_t x = 0; x < n; ++x) {
    if (ups[x].size() != n) throw std::invalid_argument("up-set has the wrong length");
    if (!ups[x].test(x)) throw PosetAxiomError("reflexivity fails at " + keys[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    ups[x].for_each([&](std::size_t y) {
      if (y != x && ups[y].test(x)) {
        throw PosetAxiomError("antisymmetry fails for " + keys[x] + " and " + keys[y]);
      }
      if (!ups[y].is_subset_of(ups[x])) {
        auto extra = ups[y];
        extra -= ups[x];
        const std::size_t z = extra.indices().front();
        throw PosetAxiomError("transitivity fails for " + keys[x] + " <= " + keys[y] + " <= " +
                              keys[z]);
      }
    });
  }
  return finish(std::move(keys), std::move(ups));
}

FinitePoset FinitePoset::from_lower_neighbours(std::vector<std::string> keys,
                                               const std::vector<std::vector<std::size_t>>& lower) {
  const std::size_t n = keys.size();
  if (lower.size() != n) throw std::invalid_argument("one neighbour list per element is required");
  // Kahn order on the generating graph, lower elements first.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> upper(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : lower[x]) {
      if (y >= n) throw std::invalid_argument("neighbour index out of range");
      if (y == x) throw PosetAxiomError("element " + keys[x] + " lies strictly below itself");
      upper[y].push_back(x);
      ++pending[x];
    }
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    if (pending[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (auto x : upper[order[head]])
      if (--pending[x] == 0) order.push_back(x);
  if (order.size() != n) {
    for (std::size_t x = 0; x < n; ++x)
      if (pending[x] > 0) throw PosetAxiomError("the relation has a cycle through " + keys[x]);
  }
  std::vector<DynamicBitset> downs(n, DynamicBitset(n));
  for (auto x : order) {
    downs[x].set(x);
    for (auto y : lower[x]) downs[x] |= downs[y];
  }
  std::vector<DynamicBitset> ups(n, DynamicBitset(n));
  for (std::size_t x = 0; x < n; ++x) downs[x].for_each([&](std::size_t y) { ups[y].set(x); });
  FinitePoset p;
  p.keys_ = std::move(keys);
  p.index_keys();
  p.up_ = std::move(ups);
  p.down_ = std::move(downs);
  return p;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].count() == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].count() == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  std::vector<std::size_t> depth(size());
  for (std::size_t x = 0; x < size(); ++x) depth[x] = down_[x].count();
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
  return order;
}

std::vector<std::vector<std::size_t>> upper_covers(const FinitePoset& p) {
  const std::size_t n = p.size();
  const auto order = p.linear_extension();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto remaining = p.up_set(x);
    remaining.reset(x);
    auto candidates = remaining.indices();
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
    for (auto y : candidates) {
      if (!remaining.test(y)) continue;
      covers[x].push_back(y);
      remaining -= p.up_set(y);
    }
    std::sort(covers[x].begin(), covers[x].end());
  }
  return covers;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_edges(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto covers = upper_covers(p);
  for (std::size_t x = 0; x < covers.size(); ++x)
    for (auto y : covers[x]) out.emplace_back(x, y);
  return out;
}

ChainStatistics chain_statistics(const FinitePoset& p) {
  if (p.empty()) throw std::invalid_argument("chain statistics need a nonempty poset");
  const std::size_t n = p.size();
  const auto covers = upper_covers(p);
  std::vector<int> lo(n, 0), hi(n, 0);
  for (auto x : p.minimal_elements()) lo[x] = hi[x] = 1;
  ChainStatistics s;
  s.elements = n;
  for (auto x : p.linear_extension()) {
    s.cover_edges += covers[x].size();
    for (auto y : covers[x]) {
      lo[y] = lo[y] == 0 ? lo[x] + 1 : std::min(lo[y], lo[x] + 1);
      hi[y] = std::max(hi[y], hi[x] + 1);
    }
  }
  int shortest = std::numeric_limits<int>::max();
  int longest = 0;
  for (auto x : p.maximal_elements()) {
    shortest = std::min(shortest, lo[x]);
    longest = std::max(longest, hi[x]);
  }
  s.rank_cardinality = longest;
  s.rank_length = longest - 1;
  s.shortest_maximal_chain = shortest;
  s.pure = shortest == longest;
  return s;
}

int rank_length(const FinitePoset& p) { return chain_statistics(p).rank_length; }
int rank_cardinality(const FinitePoset& p) { return chain_statistics(p).rank_cardinality; }
bool is_pure(const FinitePoset& p) { return chain_statistics(p).pure; }

std::size_t count_maximal_chains(const FinitePoset& p, std::size_t cap) {
  const auto covers = upper_covers(p);
  std::vector<std::size_t> ways(p.size(), 0);
  const std::size_t limit = cap + 1;
  auto order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    if (covers[x].empty()) {
      ways[x] = 1;
      continue;
    }
    std::size_t w = 0;
    for (auto y : covers[x]) w = std::min(limit, w + ways[y]);
    ways[x] = w;
  }
  std::size_t total = 0;
  for (auto x : p.minimal_elements()) total = std::min(limit, total + ways[x]);
  return total;
}

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& members) {
  const std::size_t n = members.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (auto x : members) keys.push_back(p.key(x));
  std::vector<DynamicBitset> ups(n, DynamicBitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(members[a], members[b])) ups[a].set(b);
  return FinitePoset::from_up_sets(std::move(keys), std::move(ups));
}

FinitePoset open_interval_above(const FinitePoset& p, std::size_t x) {
  if (x >= p.size()) throw std::invalid_argument("element index outside the poset");
  auto members = p.up_set(x).indices();
  members.erase(std::remove(members.begin(), members.end(), x), members.end());
  return induced_subposet(p, members);
}

FinitePoset adjoin_bottom(const FinitePoset& p, const std::string& label) {
  const std::size_t n = p.size() + 1;
  std::vector<std::string> keys{label};
  keys.insert(keys.end(), p.keys().begin(), p.keys().end());
  std::vector<DynamicBitset> ups(n, DynamicBitset(n));
  for (std::size_t y = 0; y < n; ++y) ups[0].set(y);
  for (std::size_t x = 0; x < p.size(); ++x)
    p.up_set(x).for_each([&](std::size_t y) { ups[x + 1].set(y + 1); });
  return FinitePoset::from_up_sets(std::move(keys), std::move(ups));
}

FinitePoset direct_product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) keys.push_back("(" + p.key(i) + ", " + q.key(j) + ")");
  std::vector<DynamicBitset> ups(n, DynamicBitset(n));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      auto& u = ups[i * q.size() + j];
      p.up_set(i).for_each([&](std::size_t a) {
        q.up_set(j).for_each([&](std::size_t b) { u.set(a * q.size() + b); });
      });
    }
  return FinitePoset::from_up_sets(std::move(keys), std::move(ups));
}

namespace {

struct Signature {
  std::size_t up, down, up_covers, down_covers;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FinitePoset& p) {
  const auto covers = upper_covers(p);
  std::vector<std::size_t> below(p.size(), 0);
  for (const auto& c : covers)
    for (auto y : c) ++below[y];
  std::vector<Signature> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    out[x] = {p.up_set(x).count(), p.down_set(x).count(), covers[x].size(), below[x]};
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p,
                                                         const FinitePoset& q, std::size_t cap) {
  require_within(std::max(p.size(), q.size()), cap, "isomorphism search size");
  if (p.size() != q.size()) return std::nullopt;
  const std::size_t n = p.size();
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto order = p.linear_extension();
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const auto x = order[depth];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sp[x] != sq[c]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const auto y = order[d];
        ok = p.leq(x, y) == q.leq(c, image[y]) && p.leq(y, x) == q.leq(image[y], c);
      }
      if (!ok) continue;
      used[c] = true;
      image[x] = c;
      if (self(self, depth + 1)) return true;
      used[c] = false;
      image[x] = n;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t cap) {
  return find_isomorphism(p, q, cap).has_value();
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::neither:
      return "neither";
    case MapKind::homomorphism:
      return "homomorphism";
    case MapKind::isomorphism:
      return "isomorphism";
  }
  return "?";
}

OrderMapReport check_order_map(const std::vector<std::size_t>& f, const FinitePoset& p,
                               const FinitePoset& q, std::size_t cap) {
  require_within(std::max(p.size(), q.size()), cap, "order map check size");
  if (f.size() != p.size()) throw std::invalid_argument("map must send every element");
  for (auto y : f)
    if (y >= q.size()) throw std::invalid_argument("map image outside the target poset");
  OrderMapReport r;
  r.order_preserving = true;
  for (std::size_t x = 0; x < p.size() && r.order_preserving; ++x) {
    p.up_set(x).for_each([&](std::size_t y) {
      if (r.order_preserving && !q.leq(f[x], f[y])) {
        r.order_preserving = false;
        r.counterexample = p.key(x) + " <= " + p.key(y) + " but " + q.key(f[x]) + " !<= " +
                           q.key(f[y]);
      }
    });
  }
  std::vector<std::size_t> hits(q.size(), 0);
  for (auto y : f) ++hits[y];
  r.injective = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h <= 1; });
  r.surjective = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h >= 1; });
  if (r.counterexample.empty() && !r.injective) {
    for (std::size_t a = 0; a < f.size() && r.counterexample.empty(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        if (f[a] == f[b]) {
          r.counterexample = p.key(a) + " and " + p.key(b) + " both map to " + q.key(f[a]);
          break;
        }
  }
  if (r.order_preserving && r.injective && r.surjective) {
    // A bijective order map reflects order iff up-set sizes agree.
    r.order_reflecting = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p.up_set(x).count() != q.up_set(f[x]).count()) {
        r.order_reflecting = false;
        q.up_set(f[x]).for_each([&](std::size_t t) {
          if (!r.counterexample.empty()) return;
          const auto pre = static_cast<std::size_t>(std::find(f.begin(), f.end(), t) - f.begin());
          if (!p.leq(x, pre)) {
            r.counterexample = q.key(f[x]) + " <= " + q.key(t) + " but " + p.key(x) + " !<= " +
                               p.key(pre);
          }
        });
        break;
      }
    }
  }
  if (r.order_preserving) r.kind = r.order_reflecting ? MapKind::isomorphism : MapKind::homomorphism;
  return r;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    os << "  n" << x << " [label=\"" << dot_escape(p.key(x)) << "\"];\n";
  for (const auto& [a, b] : cover_edges(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string stats_report(const FinitePoset& p) {
  const auto s = chain_statistics(p);
  std::ostringstream os;
  os << "elements: " << s.elements << "\n"
     << "cover_edges: " << s.cover_edges << "\n"
     << "rank_length: " << s.rank_length << "\n"
     << "rank_cardinality: " << s.rank_cardinality << "\n"
     << "pure: " << (s.pure ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace rnaposet

#include "rnaposet/families.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "rnaposet/clique.hpp"

namespace rnaposet {

std::vector<Arc> admissible_arcs(int n) {
  std::vector<Arc> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (j - i < n - 1) out.push_back({i, j});
  return out;
}

namespace {

// Nonempty subsets of `pool` without k+1 pairwise crossing arcs.
std::vector<Diagram> noncrossing_subsets(int n, int k, const std::vector<Arc>& pool,
                                         const Limits& limits) {
  std::vector<Diagram> out;
  std::vector<Arc> chosen;
  auto fits = [&](const Arc& a) {
    std::vector<std::size_t> nb;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (arcs_cross(a, chosen[i])) nb.push_back(i);
    if (static_cast<int>(nb.size()) < k) return true;
    std::vector<DynamicBitset> adj(nb.size(), DynamicBitset(nb.size()));
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (arcs_cross(chosen[nb[x]], chosen[nb[y]])) {
          adj[x].set(y);
          adj[y].set(x);
        }
    return max_clique_size(adj, k) < k;
  };
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == pool.size()) {
      if (!chosen.empty()) {
        require_within(out.size() + 1, limits.max_elements, "diagram family size");
        out.emplace_back(n, chosen);
      }
      return;
    }
    self(self, i + 1);
    if (fits(pool[i])) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

LabelledPoset<Diagram> subset_poset(std::vector<Diagram> items) {
  std::vector<std::string> keys;
  for (const auto& d : items) keys.push_back(diagram_key(d));
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  LabelledPoset<Diagram> out;
  std::vector<std::string> sorted_keys;
  for (auto i : order) {
    out.items.push_back(items[i]);
    sorted_keys.push_back(keys[i]);
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < sorted_keys.size(); ++i) index.emplace(sorted_keys[i], i);
  std::vector<std::vector<std::size_t>> lower(out.items.size());
  for (std::size_t x = 0; x < out.items.size(); ++x) {
    const auto& d = out.items[x];
    if (d.arc_count() < 2) continue;
    for (const auto& a : d.arcs()) {
      auto it = index.find(diagram_key(delete_arc(d, a)));
      if (it == index.end()) {
        throw std::logic_error("family is not closed under arc deletion at " + sorted_keys[x]);
      }
      lower[x].push_back(it->second);
    }
  }
  out.poset = FinitePoset::from_lower_neighbours(std::move(sorted_keys), lower);
  return out;
}

void check_polygon(int m, int k) {
  if (m < 4) throw std::invalid_argument("diagram families need n >= 4");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

}  // namespace

LabelledPoset<Diagram> build_S(int n, int k, const Limits& limits) {
  check_polygon(n, k);
  return subset_poset(noncrossing_subsets(n, k, admissible_arcs(n), limits));
}

LabelledPoset<Diagram> build_So(int m, int k, const Limits& limits) {
  check_polygon(m, k);
  std::vector<Arc> pool;
  for (const auto& a : admissible_arcs(m))
    if (is_k_relevant(a.lo, a.hi, m, k)) pool.push_back(a);
  return subset_poset(noncrossing_subsets(m, k, pool, limits));
}

LabelledPoset<Diagram> build_Sstar(int m, int k, const Limits& limits) {
  check_polygon(m, k);
  std::vector<Arc> pool;
  for (const auto& a : admissible_arcs(m))
    if (!is_k_relevant(a.lo, a.hi, m, k)) pool.push_back(a);
  return subset_poset(noncrossing_subsets(m, k, pool, limits));
}

LabelledPoset<SymmetricMatrix> build_M(int m, int k, int r, const Limits& limits) {
  auto items = enumerate_matrices(m, k, r, limits.max_matrix_search);
  require_within(items.size(), limits.max_elements, "matrix family size");
  const std::size_t n = items.size();
  std::vector<std::string> keys;
  for (const auto& x : items) keys.push_back(matrix_key(x));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  LabelledPoset<SymmetricMatrix> out;
  std::vector<std::string> sorted_keys;
  for (auto i : order) {
    out.items.push_back(items[i]);
    sorted_keys.push_back(keys[i]);
  }
  // above[p][v]: members whose entry at position p is at least v.
  std::vector<std::pair<int, int>> positions;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) positions.emplace_back(i, j);
  std::vector<std::vector<DynamicBitset>> above(positions.size());
  for (std::size_t p = 0; p < positions.size(); ++p) {
    int top = 0;
    for (const auto& x : out.items) top = std::max(top, x.at(positions[p].first, positions[p].second));
    above[p].assign(top + 1, DynamicBitset(n));
    for (std::size_t e = 0; e < n; ++e) {
      const int v = out.items[e].at(positions[p].first, positions[p].second);
      for (int t = 0; t <= v; ++t) above[p][t].set(e);
    }
  }
  std::vector<DynamicBitset> ups(n);
  for (std::size_t e = 0; e < n; ++e) {
    DynamicBitset u(n);
    for (std::size_t w = 0; w < n; ++w) u.set(w);
    for (std::size_t p = 0; p < positions.size(); ++p) {
      const int v = out.items[e].at(positions[p].first, positions[p].second);
      if (v > 0) u &= above[p][v];
    }
    ups[e] = std::move(u);
  }
  out.poset = FinitePoset::from_up_sets(std::move(sorted_keys), std::move(ups));
  return out;
}

std::vector<std::vector<std::size_t>> suppression_lower_neighbours(
    const std::vector<Diagram>& items, const std::vector<std::string>& keys) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  std::vector<std::vector<std::size_t>> lower(items.size());
  for (std::size_t x = 0; x < items.size(); ++x) {
    const auto& d = items[x];
    if (d.arc_count() < 2) continue;
    std::set<std::size_t> seen;
    for (const auto& a : d.arcs()) {
      auto it = index.find(diagram_key(suppress_arc(d, a)));
      if (it == index.end()) {
        throw std::logic_error("family is not closed under suppression at " + keys[x]);
      }
      seen.insert(it->second);
    }
    lower[x].assign(seen.begin(), seen.end());
  }
  return lower;
}

namespace {

void check_pw(const PwParams& p) {
  if (p.f < 2 || p.k < 1 || p.r < 0 || p.f + p.r < 3) {
    throw std::invalid_argument("family parameters need f >= 2, k >= 1, r >= 0, f + r >= 3; got " +
                                p.describe());
  }
}

}  // namespace

LabelledPoset<Diagram> build_P(const PwParams& p, POrder order, const Limits& limits) {
  check_pw(p);
  auto matrices = build_M(p.f + 1, p.k, p.r, limits);
  const std::size_t n = matrices.size();
  std::vector<Diagram> diagrams;
  std::vector<std::string> keys;
  diagrams.reserve(n);
  for (const auto& m : matrices.items) {
    diagrams.push_back(beta_inverse(m, p));
    keys.push_back(diagram_key(diagrams.back()));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[perm[i]] = i;
  LabelledPoset<Diagram> out;
  std::vector<std::string> sorted_keys;
  for (auto i : perm) {
    out.items.push_back(diagrams[i]);
    sorted_keys.push_back(keys[i]);
  }
  if (order == POrder::transported) {
    std::vector<DynamicBitset> ups(n, DynamicBitset(n));
    for (std::size_t x = 0; x < n; ++x)
      matrices.poset.up_set(x).for_each([&](std::size_t y) { ups[slot[x]].set(slot[y]); });
    out.poset = FinitePoset::from_up_sets(std::move(sorted_keys), std::move(ups));
  } else {
    const auto lower = suppression_lower_neighbours(out.items, sorted_keys);
    out.poset = FinitePoset::from_lower_neighbours(std::move(sorted_keys), lower);
  }
  return out;
}

int length_bound(int f, int p) { return (f + 3) * (f + 2) / 2 + 2 * p; }

LabelledPoset<Diagram> build_D(const PwParams& p, const Limits& limits) {
  check_pw(p);
  // One insertion past the length bound.
  const int max_length = length_bound(p.f, p.r) + 2;
  std::set<Diagram> found;
  std::vector<Diagram> frontier;
  auto insert_arc = [&](const Diagram& d, int a, int b) -> std::optional<Diagram> {
    // New sites take labels a < b in the longer diagram.
    const int n = d.length() + 2;
    if (b - a <= 1 || b - a >= n - 1) return std::nullopt;
    auto shift = [&](int x) {
      int y = x;
      if (y >= a) ++y;
      if (y >= b) ++y;
      return y;
    };
    std::vector<Arc> arcs{{a, b}};
    for (const auto& e : d.arcs()) arcs.push_back({shift(e.lo), shift(e.hi)});
    return Diagram(n, std::move(arcs));
  };
  auto grow = [&](const Diagram& d) {
    const int n = d.length() + 2;
    if (n > max_length) return;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 2; b <= n; ++b) {
        auto next = insert_arc(d, a, b);
        if (!next || found.count(*next) || !in_proper_family(*next, p)) continue;
        require_within(found.size() + 1, limits.max_elements, "proper diagram family size");
        found.insert(*next);
        frontier.push_back(*next);
      }
  };
  grow(Diagram::trivial(p.f));
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Diagram d = frontier[head];
    grow(d);
  }
  LabelledPoset<Diagram> out;
  std::vector<std::string> keys;
  out.items.assign(found.begin(), found.end());
  for (const auto& d : out.items) keys.push_back(diagram_key(d));
  std::vector<std::size_t> perm(out.items.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Diagram> items;
  std::vector<std::string> sorted_keys;
  for (auto i : perm) {
    items.push_back(out.items[i]);
    sorted_keys.push_back(keys[i]);
  }
  out.items = std::move(items);
  const auto lower = suppression_lower_neighbours(out.items, sorted_keys);
  out.poset = FinitePoset::from_lower_neighbours(std::move(sorted_keys), lower);
  return out;
}

}  // namespace rnaposet

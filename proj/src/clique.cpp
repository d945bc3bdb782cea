#include "rnaposet/clique.hpp"

#include <algorithm>

namespace rnaposet {

namespace {

struct CliqueSearch {
  const std::vector<DynamicBitset>& adjacency;
  int stop_at;
  int best = 0;

  void expand(int depth, DynamicBitset candidates) {
    if (best >= stop_at) return;
    std::size_t remaining = candidates.count();
    if (remaining == 0) {
      best = std::max(best, depth);
      return;
    }
    if (depth + static_cast<int>(remaining) <= best) return;
    for (std::size_t v : candidates.indices()) {
      if (depth + static_cast<int>(remaining) <= best || best >= stop_at) return;
      DynamicBitset next = candidates;
      next &= adjacency[v];
      expand(depth + 1, std::move(next));
      candidates.reset(v);
      --remaining;
    }
  }
};

}  // namespace

int max_clique_size(const std::vector<DynamicBitset>& adjacency, int stop_at) {
  if (adjacency.empty()) return 0;
  DynamicBitset all(adjacency.size());
  for (std::size_t i = 0; i < adjacency.size(); ++i) all.set(i);
  CliqueSearch search{adjacency, stop_at};
  search.expand(0, all);
  return std::min(search.best, stop_at);
}

}  // namespace rnaposet

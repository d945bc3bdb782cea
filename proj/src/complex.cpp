#include "rnaposet/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rnaposet/clique.hpp"

namespace rnaposet {

namespace {

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::size_t h = f.size();
    for (int v : f) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_index_facets(std::vector<std::string> labels,
                                                       std::vector<Face> facets,
                                                       bool assume_maximal) {
  for (auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("facets must be nonempty");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw std::invalid_argument("a facet repeats a vertex");
    }
    if (f.front() < 0 || f.back() >= static_cast<int>(labels.size())) {
      throw std::invalid_argument("facet vertex outside the label list");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (!assume_maximal) {
    std::vector<DynamicBitset> containing(labels.size(), DynamicBitset(facets.size()));
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (int v : facets[i]) containing[v].set(i);
    std::vector<Face> kept;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      DynamicBitset over = containing[facets[i].front()];
      for (int v : facets[i]) over &= containing[v];
      if (over.count() == 1) kept.push_back(facets[i]);
    }
    facets = std::move(kept);
  }
  // Drop unused vertices.
  std::vector<int> used(labels.size(), -1);
  for (const auto& f : facets)
    for (int v : f) used[v] = 0;
  SimplicialComplex c;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (used[v] < 0) continue;
    used[v] = static_cast<int>(c.labels_.size());
    c.labels_.push_back(std::move(labels[v]));
  }
  for (auto& f : facets)
    for (auto& v : f) v = used[v];
  std::sort(facets.begin(), facets.end());
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<Face> faces;
  for (const auto& f : facets) {
    Face face;
    for (const auto& label : f) {
      auto [it, fresh] = index.emplace(label, static_cast<int>(labels.size()));
      if (fresh) labels.push_back(label);
      face.push_back(it->second);
    }
    faces.push_back(std::move(face));
  }
  return from_index_facets(std::move(labels), std::move(faces));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) - 1 != dimension()) return false;
  return true;
}

std::vector<std::vector<Face>> SimplicialComplex::faces(std::size_t cap) const {
  const int dim = dimension();
  std::vector<std::unordered_set<Face, FaceHash>> levels(dim + 1);
  std::size_t total = 0;
  for (const auto& facet : facets_) {
    const std::size_t s = facet.size();
    if (s >= 63) throw ResourceLimitError("facet with " + std::to_string(s) + " vertices");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      Face face;
      for (std::size_t i = 0; i < s; ++i)
        if (mask >> i & 1) face.push_back(facet[i]);
      const std::size_t d = face.size() - 1;
      if (levels[d].insert(std::move(face)).second) {
        require_within(++total, cap, "face count");
      }
    }
  }
  std::vector<std::vector<Face>> out(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    out[d].assign(levels[d].begin(), levels[d].end());
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector(std::size_t cap) const {
  std::vector<std::size_t> out;
  for (const auto& level : faces(cap)) out.push_back(level.size());
  return out;
}

SimplicialComplex simplex(int d) {
  if (d < -1) throw std::invalid_argument("simplex dimension must be at least -1");
  if (d == -1) return {};
  std::vector<std::string> labels;
  Face facet;
  for (int i = 0; i <= d; ++i) {
    labels.push_back(std::to_string(i));
    facet.push_back(i);
  }
  return SimplicialComplex::from_index_facets(std::move(labels), {facet}, true);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a:" + l);
  for (const auto& l : b.labels()) labels.push_back("b:" + l);
  const int shift = static_cast<int>(a.vertex_count());
  std::vector<Face> facets;
  if (a.empty() || b.empty()) {
    for (const auto& f : a.facets()) facets.push_back(f);
    for (const auto& f : b.facets()) {
      Face g;
      for (int v : f) g.push_back(v + shift);
      facets.push_back(std::move(g));
    }
  } else {
    for (const auto& f : a.facets())
      for (const auto& g : b.facets()) {
        Face h = f;
        for (int v : g) h.push_back(v + shift);
        facets.push_back(std::move(h));
      }
  }
  return SimplicialComplex::from_index_facets(std::move(labels), std::move(facets), true);
}

SimplicialComplex order_complex(const FinitePoset& p, std::size_t cap) {
  if (p.empty()) return {};
  require_within(count_maximal_chains(p, cap), cap, "maximal chain count");
  const auto covers = upper_covers(p);
  std::vector<Face> facets;
  Face chain;
  auto walk = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(static_cast<int>(x));
    if (covers[x].empty()) {
      facets.push_back(chain);
    } else {
      for (auto y : covers[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (auto x : p.minimal_elements()) walk(walk, x);
  return SimplicialComplex::from_index_facets(p.keys(), std::move(facets), true);
}

std::vector<Diagonal> relevant_diagonals(int m, int k) {
  std::vector<Diagonal> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (is_k_relevant(i, j, m, k)) out.push_back({i, j});
  return out;
}

SimplicialComplex build_T(int m, int k, std::size_t cap) {
  if (m < 4 || k < 1 || m < 2 * k + 1) {
    throw std::invalid_argument("T_{m,k} needs m >= 4, k >= 1 and m >= 2k + 1");
  }
  const auto gamma = relevant_diagonals(m, k);
  const std::size_t n = gamma.size();
  std::vector<DynamicBitset> crossing(n, DynamicBitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (arcs_cross({gamma[a].i, gamma[a].j}, {gamma[b].i, gamma[b].j})) {
        crossing[a].set(b);
        crossing[b].set(a);
      }
  // A vertex set is a face when its crossing graph has no (k+1)-clique.
  auto admits = [&](const Face& chosen, std::size_t v) {
    std::vector<int> nb;
    for (int u : chosen)
      if (crossing[v].test(u)) nb.push_back(u);
    if (static_cast<int>(nb.size()) < k) return true;
    std::vector<DynamicBitset> adj(nb.size(), DynamicBitset(nb.size()));
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (crossing[nb[x]].test(nb[y])) {
          adj[x].set(y);
          adj[y].set(x);
        }
    return max_clique_size(adj, k) < k;
  };
  std::vector<Face> facets;
  std::size_t visited = 0;
  Face chosen;
  auto visit = [&](auto&& self, std::size_t i) -> void {
    require_within(++visited, cap, "T_{m,k} face search");
    if (i == n) {
      for (std::size_t v = 0; v < n; ++v) {
        if (std::find(chosen.begin(), chosen.end(), static_cast<int>(v)) != chosen.end()) continue;
        if (admits(chosen, v)) return;  // not maximal
      }
      if (!chosen.empty()) facets.push_back(chosen);
      return;
    }
    if (admits(chosen, i)) {
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  visit(visit, 0);
  std::vector<std::string> labels;
  for (const auto& d : gamma) labels.push_back(to_string(d));
  return SimplicialComplex::from_index_facets(std::move(labels), std::move(facets), true);
}

const HomologyGroup& HomologyResult::at(int d) const {
  static const HomologyGroup zero;
  if (d < -1 || d > top()) return zero;
  return groups[d + 1];
}

std::size_t HomologyResult::betti(int d) const { return at(d).rank; }

bool HomologyResult::is_trivial() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.is_zero(); });
}

bool HomologyResult::torsion_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.torsion.empty(); });
}

long long HomologyResult::reduced_euler() const {
  long long chi = 0;
  for (int d = -1; d <= top(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti(d));
  return chi;
}

std::vector<int> HomologyResult::support() const {
  std::vector<int> out;
  for (int d = -1; d <= top(); ++d)
    if (!at(d).is_zero()) out.push_back(d);
  return out;
}

HomologyResult HomologyResult::trimmed() const {
  HomologyResult out = *this;
  while (!out.groups.empty() && out.groups.back().is_zero()) out.groups.pop_back();
  return out;
}

HomologyResult homology_from_faces(const std::vector<std::vector<Face>>& faces) {
  const int dim = static_cast<int>(faces.size()) - 1;
  HomologyResult h;
  h.groups.resize(dim + 2);
  if (dim < 0 || faces[0].empty()) {
    h.groups.assign(1, HomologyGroup{1, {}});
    return h;
  }
  // rank_of[d + 1] and torsion_of[d + 1] describe the boundary map out of C_d.
  std::vector<SmithInvariants> boundary(dim + 2);
  {
    IntegerMatrix aug{1, static_cast<int>(faces[0].size()), {}};
    for (int c = 0; c < aug.cols; ++c) aug.entries.push_back({0, c, 1});
    boundary[1] = smith_invariants(aug);
  }
  for (int d = 1; d <= dim; ++d) {
    std::unordered_map<Face, int, FaceHash> index;
    index.reserve(faces[d - 1].size());
    for (std::size_t i = 0; i < faces[d - 1].size(); ++i) index.emplace(faces[d - 1][i], i);
    IntegerMatrix m{static_cast<int>(faces[d - 1].size()), static_cast<int>(faces[d].size()), {}};
    m.entries.reserve(faces[d].size() * (d + 1));
    for (std::size_t c = 0; c < faces[d].size(); ++c) {
      const auto& f = faces[d][c];
      for (int i = 0; i <= d; ++i) {
        Face g;
        g.reserve(d);
        for (int t = 0; t <= d; ++t)
          if (t != i) g.push_back(f[t]);
        auto it = index.find(g);
        if (it == index.end()) throw std::logic_error("face list is not closed under boundary");
        m.entries.push_back({it->second, static_cast<int>(c), i % 2 == 0 ? 1 : -1});
      }
    }
    boundary[d + 1] = smith_invariants(m);
  }
  auto chain_rank = [&](int d) -> std::size_t { return d == -1 ? 1 : faces[d].size(); };
  for (int d = -1; d <= dim; ++d) {
    const std::size_t out_rank = boundary[d + 1].rank;
    const std::size_t in_rank = d + 2 <= dim + 1 ? boundary[d + 2].rank : 0;
    auto& g = h.groups[d + 1];
    g.rank = chain_rank(d) - out_rank - in_rank;
    if (d + 2 <= dim + 1) g.torsion = boundary[d + 2].torsion;
  }
  return h;
}

HomologyResult reduced_homology(const SimplicialComplex& c, std::size_t cap) {
  return homology_from_faces(c.faces(cap));
}

long long euler_characteristic(const SimplicialComplex& c, std::size_t cap) {
  long long chi = 0;
  const auto fv = c.f_vector(cap);
  for (std::size_t d = 0; d < fv.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(fv[d]);
  return chi;
}

FinitePoset face_poset(const SimplicialComplex& c, std::size_t cap) {
  const auto levels = c.faces(cap);
  std::vector<std::string> keys;
  std::unordered_map<Face, std::size_t, FaceHash> index;
  std::vector<const Face*> all;
  for (const auto& level : levels)
    for (const auto& f : level) {
      std::string key = "{";
      for (std::size_t i = 0; i < f.size(); ++i) key += (i ? "," : "") + c.labels()[f[i]];
      key += "}";
      index.emplace(f, keys.size());
      keys.push_back(std::move(key));
      all.push_back(&f);
    }
  std::vector<std::vector<std::size_t>> lower(all.size());
  for (std::size_t x = 0; x < all.size(); ++x) {
    const auto& f = *all[x];
    if (f.size() < 2) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != i) g.push_back(f[t]);
      lower[x].push_back(index.at(g));
    }
  }
  return FinitePoset::from_lower_neighbours(std::move(keys), lower);
}

namespace {

// cyclic groups Z/a (a = 0 meaning Z) making up a group
std::vector<BigInt> cyclic_factors(const HomologyGroup& g) {
  std::vector<BigInt> out(g.rank, BigInt(0));
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

void add_cyclic(HomologyGroup& g, const BigInt& order) {
  if (order == 0) {
    ++g.rank;
  } else if (order > 1) {
    g.torsion.push_back(order);
  }
}

HomologyGroup normalize(HomologyGroup g) {
  // Re-express the torsion part through invariant factors.
  auto diag = g.torsion;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt gg = boost::multiprecision::gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / gg * diag[j];
      diag[i] = gg;
      diag[j] = l;
    }
  g.torsion.clear();
  for (auto& d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace

HomologyResult join_homology(const HomologyResult& a, const HomologyResult& b) {
  // H~_{n+1}(A*B) = sum_{i+j=n} H~_i(A) (x) H~_j(B) + sum_{i+j=n-1} Tor(H~_i(A), H~_j(B)).
  const int top = a.top() + b.top() + 1;
  HomologyResult out;
  out.groups.resize(std::max(top, -1) + 2);
  for (int i = -1; i <= a.top(); ++i)
    for (int j = -1; j <= b.top(); ++j) {
      const auto fa = cyclic_factors(a.at(i));
      const auto fb = cyclic_factors(b.at(j));
      for (const auto& x : fa)
        for (const auto& y : fb) {
          // Z/x (x) Z/y = Z/gcd(x, y), with Z = Z/0.
          const BigInt tensor = boost::multiprecision::gcd(x, y);
          add_cyclic(out.groups[i + j + 2], tensor);
          if (x != 0 && y != 0 && i + j + 3 <= top + 1) {
            add_cyclic(out.groups[i + j + 3], tensor);
          }
        }
    }
  for (auto& g : out.groups) g = normalize(std::move(g));
  return out;
}

HomologyResult sphere_homology(int d) {
  HomologyResult h;
  h.groups.resize(d + 2);
  h.groups[d + 1].rank = 1;
  return h;
}

bool sphere_signature(const HomologyResult& h, int dimension, bool pure, int d) {
  return pure && dimension == d && h == sphere_homology(d);
}

bool sphere_signature(const SimplicialComplex& c, int d) {
  return sphere_signature(reduced_homology(c), c.dimension(), c.is_pure(), d);
}

bool join_signature(const HomologyResult& h, int d1, int d2) {
  if (d2 >= 0) return h.is_trivial();
  return h == sphere_homology(d1);
}

std::optional<SimplicialComplex> as_face_poset_complex(const FinitePoset& p) {
  if (p.empty()) return std::nullopt;
  const auto atoms = p.minimal_elements();
  const std::size_t n = p.size();
  std::vector<Face> atom_sets(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (p.leq(atoms[a], x)) atom_sets[x].push_back(static_cast<int>(a));
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t x = 0; x < n; ++x)
    if (!index.emplace(atom_sets[x], x).second) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x) {
    DynamicBitset over(n);
    for (std::size_t w = 0; w < n; ++w) over.set(w);
    for (int a : atom_sets[x]) over &= p.up_set(atoms[a]);
    if (!(over == p.up_set(x))) return std::nullopt;
    if (atom_sets[x].size() < 2) continue;
    for (std::size_t i = 0; i < atom_sets[x].size(); ++i) {
      Face g = atom_sets[x];
      g.erase(g.begin() + static_cast<long>(i));
      if (!index.count(g)) return std::nullopt;
    }
  }
  std::vector<std::string> labels;
  for (auto a : atoms) labels.push_back(p.key(a));
  std::vector<Face> facets;
  for (auto x : p.maximal_elements()) facets.push_back(atom_sets[x]);
  return SimplicialComplex::from_index_facets(std::move(labels), std::move(facets), true);
}

TopologySummary order_complex_topology(const FinitePoset& p, TopologyRoute route,
                                       const Limits& limits) {
  if (p.empty()) throw std::invalid_argument("topology of an empty poset");
  const auto stats = chain_statistics(p);
  TopologySummary s;
  s.dimension = stats.rank_length;
  s.pure = stats.pure;
  const std::size_t chains = count_maximal_chains(p, limits.max_faces);
  const bool direct_fits =
      stats.rank_cardinality < 40 &&
      chains * ((std::size_t{1} << stats.rank_cardinality) - 1) <= limits.max_faces;
  if (route == TopologyRoute::direct || (route == TopologyRoute::automatic && direct_fits)) {
    if (!direct_fits) {
      throw ResourceLimitError("order complex with " + std::to_string(chains) +
                               " maximal chains exceeds the face cap");
    }
    const auto c = order_complex(p, limits.max_faces);
    const auto levels = c.faces(limits.max_faces);
    s.method = "direct";
    s.vertices = c.vertex_count();
    for (const auto& l : levels) s.faces += l.size();
    s.homology = homology_from_faces(levels);
    return s;
  }
  auto k = as_face_poset_complex(p);
  if (!k) {
    throw ResourceLimitError("order complex exceeds the face cap and the poset is not a face poset");
  }
  const auto levels = k->faces(limits.max_faces);
  s.method = "face-poset";
  s.vertices = k->vertex_count();
  for (const auto& l : levels) s.faces += l.size();
  s.homology = homology_from_faces(levels);
  return s;
}

std::string format_group(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.rank > 0) parts.push_back("Z^" + std::to_string(g.rank));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string format_homology(const HomologyResult& h) {
  std::ostringstream os;
  for (int d = -1; d <= h.top(); ++d) os << "H~_" << d << " = " << format_group(h.at(d)) << "\n";
  return os.str();
}

std::string write_facets(const SimplicialComplex& c) {
  std::ostringstream os;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << c.labels()[f[i]];
    os << "\n";
  }
  return os.str();
}

SimplicialComplex read_facets(const std::string& text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> facet;
    std::istringstream ls(line);
    std::string label;
    while (std::getline(ls, label, ',')) {
      const auto b = label.find_first_not_of(" \t");
      const auto e = label.find_last_not_of(" \t");
      if (b == std::string::npos) {
        throw std::invalid_argument("empty vertex label on line " + std::to_string(line_no));
      }
      facet.push_back(label.substr(b, e - b + 1));
    }
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace rnaposet

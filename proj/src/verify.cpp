#include "rnaposet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rnaposet/complex.hpp"
#include "rnaposet/families.hpp"
#include "rnaposet/transform.hpp"

namespace rnaposet {

int GridPoint::get(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw std::invalid_argument("grid point lacks parameter " + name);
  return it->second;
}

std::string GridPoint::describe() const {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ',';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("bad integer \"" + s + "\" in grid term " + context);
  }
  return v;
}

std::vector<int> parse_values(const std::string& text, const std::string& term) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = parse_int(text.substr(0, dots), term);
    const int b = parse_int(text.substr(dots + 2), term);
    if (b < a) throw std::invalid_argument("empty range in grid term " + term);
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  for (const auto& piece : split(text, '/')) out.push_back(parse_int(piece, term));
  return out;
}

}  // namespace

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> out;
  for (const auto& block : split(text, ';')) {
    if (block.empty()) continue;
    std::vector<GridPoint> points{GridPoint{}};
    for (const auto& term : split(block, ',')) {
      const auto eq = term.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("grid term \"" + term + "\" is not name=values");
      }
      const std::string name = term.substr(0, eq);
      const auto values = parse_values(term.substr(eq + 1), term);
      std::vector<GridPoint> next;
      for (const auto& p : points) {
        if (p.has(name)) throw std::invalid_argument("grid repeats parameter " + name);
        for (int v : values) {
          GridPoint q = p;
          q.values[name] = v;
          next.push_back(std::move(q));
        }
      }
      points = std::move(next);
    }
    out.insert(out.end(), points.begin(), points.end());
  }
  if (out.empty()) throw std::invalid_argument("grid is empty");
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.pass || p.skipped; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "thm11", "thm12", "beta", "rho", "tau", "theta", "kappa", "equivalence",
      "regular-unique", "dual-matrix", "realize-roundtrip", "length-bound", "join"};
  return names;
}

std::string default_grid(const std::string& check) {
  static const std::map<std::string, std::string> grids{
      {"thm11", "f=4..6,k=1;f=5..6,k=2"},
      {"thm12", "f=3..5,k=1..2,r=0..2"},
      {"beta", "f=3..5,k=1..2,r=0..2"},
      {"rho", "f=3,k=1..2,r=0..1"},
      {"tau", "n=4..7,k=1..2"},
      {"theta", "m=5..8,k=1;m=6..8,k=2"},
      {"kappa", "m=5,k=1;m=6..7,k=2"},
      {"equivalence", "n=4..8"},
      {"regular-unique", "n=4..8"},
      {"dual-matrix", "n=3..7"},
      {"realize-roundtrip", "m=4..6,k=1..2,r=0..2"},
      {"length-bound", "f=3,k=1..2,r=0..1;n=4..9"},
      {"join", "m=5..7,k=1;m=6..7,k=2"},
  };
  auto it = grids.find(check);
  if (it == grids.end()) throw std::invalid_argument("unknown check " + check);
  return it->second;
}

std::vector<Diagram> all_diagrams(int n) {
  const auto pool = admissible_arcs(n);
  if (pool.size() > 24) throw ResourceLimitError("too many arc subsets at length " + std::to_string(n));
  std::vector<Diagram> out;
  for (std::uint32_t mask = 0; mask < (1U << pool.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) arcs.push_back(pool[i]);
    out.emplace_back(n, std::move(arcs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> proper_diagrams(int n) {
  std::vector<Diagram> out;
  if (n < 4) return out;
  std::vector<int> mate(n + 1, 0);
  std::vector<Arc> arcs;
  auto visit = [&](auto&& self, int s) -> void {
    if (s > n) {
      if (arcs.empty()) return;
      Diagram d(n, arcs);
      if (is_proper(d)) out.push_back(std::move(d));
      return;
    }
    if (mate[s] != 0) {
      self(self, s + 1);
      return;
    }
    self(self, s + 1);
    for (int t = s + 2; t <= n; ++t) {
      if (mate[t] != 0 || t - s >= n - 1) continue;
      mate[s] = t;
      mate[t] = s;
      arcs.push_back({s, t});
      self(self, s + 1);
      arcs.pop_back();
      mate[s] = mate[t] = 0;
    }
  };
  visit(visit, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PointResult skip(const std::string& why) {
  PointResult r;
  r.skipped = true;
  r.detail = why;
  return r;
}

PointResult verdict(bool pass, std::string detail, std::string counterexample = {}) {
  PointResult r;
  r.pass = pass;
  r.detail = std::move(detail);
  if (!pass) r.counterexample = std::move(counterexample);
  return r;
}

std::string support_text(const HomologyResult& h) {
  std::string out;
  for (int d : h.support()) {
    if (!out.empty()) out += ", ";
    out += "H~_" + std::to_string(d) + "=" + format_group(h.at(d));
  }
  return out.empty() ? "trivial" : out;
}

// A maximal chain of extreme length, as keys from bottom to top.
std::string extreme_chain(const FinitePoset& p, bool longest) {
  const auto covers = upper_covers(p);
  const std::size_t n = p.size();
  std::vector<int> best(n, 0);
  std::vector<std::size_t> next(n, n);
  auto order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    if (covers[x].empty()) {
      best[x] = 1;
      continue;
    }
    for (auto y : covers[x]) {
      const int cand = best[y] + 1;
      if (next[x] == n || (longest ? cand > best[x] : cand < best[x])) {
        best[x] = cand;
        next[x] = y;
      }
    }
  }
  std::size_t start = n;
  for (auto x : p.minimal_elements())
    if (start == n || (longest ? best[x] > best[start] : best[x] < best[start])) start = x;
  std::string out;
  for (auto x = start; x != n; x = next[x]) out += (out.empty() ? "" : " < ") + p.key(x);
  return out;
}

bool pw_range_ok(int f, int k) { return f >= 3 && k >= 1 && f >= 2 * k; }

PointResult check_thm11(const GridPoint& g, const Limits& limits) {
  const int f = g.get("f"), k = g.get("k");
  if (!pw_range_ok(f, k)) return skip("needs f >= 3 and f >= 2k");
  const auto P = build_P({f, k, 0}, POrder::transported, limits);
  const auto t = order_complex_topology(P.poset, TopologyRoute::automatic, limits);
  const int d1 = k * (f - 2 * k) - 1;
  const int d2 = (f + 1) * (k - 1) - 1;
  const bool homology_ok = d2 >= 0 ? join_signature(t.homology, d1, d2)
                                   : sphere_signature(t.homology, t.dimension, t.pure, d1);
  const bool shape_ok = t.pure && t.dimension == d1 + d2 + 1;
  std::ostringstream os;
  os << "|P|=" << P.size() << " dim=" << t.dimension << " pure=" << (t.pure ? "yes" : "no")
     << " via " << t.method << " (" << t.faces << " faces); homology " << support_text(t.homology)
     << "; expected sphere " << d1 << " * simplex " << d2;
  return verdict(homology_ok && shape_ok, os.str(), format_homology(t.homology));
}

PointResult check_thm12(const GridPoint& g, const Limits& limits) {
  const int f = g.get("f"), k = g.get("k"), r = g.get("r");
  if (!pw_range_ok(f, k) || r < 0) return skip("needs f >= 3, f >= 2k and r >= 0");
  const auto P = build_P({f, k, r}, POrder::suppression, limits);
  const auto s = chain_statistics(P.poset);
  const int formula = k * (2 * f - 2 * k + 1) + r - f - 1;
  std::ostringstream os;
  os << "|P|=" << P.size() << " rank_length=" << s.rank_length
     << " rank_cardinality=" << s.rank_cardinality << " formula=" << formula
     << " pure=" << (s.pure ? "yes" : "no");
  std::string cx;
  if (!s.pure || s.rank_cardinality != formula) {
    cx = "longest: " + extreme_chain(P.poset, true) + " | shortest: " + extreme_chain(P.poset, false);
  }
  return verdict(s.pure && s.rank_cardinality == formula, os.str(), cx);
}

std::vector<std::size_t> map_by_key(const std::vector<std::string>& images, const FinitePoset& q,
                                    std::string& missing) {
  std::vector<std::size_t> f;
  for (const auto& key : images) {
    auto idx = q.index_of(key);
    if (!idx) {
      missing = key;
      return {};
    }
    f.push_back(*idx);
  }
  return f;
}

PointResult check_beta(const GridPoint& g, const Limits& limits) {
  const int f = g.get("f"), k = g.get("k"), r = g.get("r");
  if (!pw_range_ok(f, k) || r < 0) return skip("needs f >= 3, f >= 2k and r >= 0");
  const PwParams params{f, k, r};
  const auto P = build_P(params, POrder::suppression, limits);
  const auto Pt = build_P(params, POrder::transported, limits);
  const auto M = build_M(f + 1, k, r, limits);
  std::vector<std::string> images;
  for (std::size_t x = 0; x < P.size(); ++x) {
    const auto& S = P.items[x];
    const auto B = beta(S, params);
    if (!(beta_inverse(B, params) == S)) {
      return verdict(false, "beta_inverse(beta(S)) != S", to_string(S));
    }
    images.push_back(matrix_key(B));
  }
  std::string missing;
  const auto fmap = map_by_key(images, M.poset, missing);
  if (fmap.empty() && !images.empty()) return verdict(false, "beta leaves the matrix family", missing);
  const auto report = check_order_map(fmap, P.poset, M.poset, limits.max_elements);
  if (report.kind != MapKind::isomorphism) {
    return verdict(false, "beta is " + to_string(report.kind), report.counterexample);
  }
  bool same_order = Pt.poset.keys() == P.poset.keys();
  for (std::size_t x = 0; same_order && x < P.size(); ++x)
    same_order = Pt.poset.up_set(x) == P.poset.up_set(x);
  if (!same_order) return verdict(false, "suppression order differs from transported domination");
  std::ostringstream os;
  os << "beta: P(" << params.describe() << ") -> M^" << r << "_{" << f + 1 << "," << k
     << "} isomorphism on " << P.size() << " elements; suppression order = transported order";
  if (r == 0) {
    const auto S = build_S(f + 1, k, limits);
    std::vector<std::string> diag_images;
    for (const auto& d : P.items) diag_images.push_back(diagram_key(tau_inverse(beta(d, params))));
    const auto smap = map_by_key(diag_images, S.poset, missing);
    if (smap.empty() && !diag_images.empty()) return verdict(false, "tau^-1 beta leaves S", missing);
    const auto rep = check_order_map(smap, P.poset, S.poset, limits.max_elements);
    if (rep.kind != MapKind::isomorphism) {
      return verdict(false, "tau^-1 beta is " + to_string(rep.kind), rep.counterexample);
    }
    os << "; tau^-1 beta: -> S_{" << f + 1 << "," << k << "} isomorphism";
  }
  return verdict(true, os.str());
}

PointResult check_rho(const GridPoint& g, const Limits& limits) {
  const int f = g.get("f"), k = g.get("k"), r = g.get("r");
  if (f < 2 || k < 1 || r < 0 || f + r < 3) return skip("needs f >= 2, k >= 1, r >= 0, f + r >= 3");
  const PwParams params{f, k, r};
  const auto D = build_D(params, limits);
  const auto M = build_M(f + 1, k, r, limits);
  std::vector<std::string> images;
  for (const auto& d : D.items) images.push_back(matrix_key(block_matrix(d)));
  std::string missing;
  const auto fmap = map_by_key(images, M.poset, missing);
  if (fmap.empty() && !images.empty()) return verdict(false, "rho leaves the matrix family", missing);
  const auto rep = check_order_map(fmap, D.poset, M.poset, limits.max_elements);
  // Regular members of D against P built from the matrix side.
  std::set<std::string> regular;
  for (const auto& d : D.items)
    if (is_regular(d)) regular.insert(diagram_key(d));
  const auto P = build_P(params, POrder::suppression, limits);
  const std::set<std::string> pkeys(P.poset.keys().begin(), P.poset.keys().end());
  bool p_order_ok = regular == pkeys;
  for (std::size_t x = 0; p_order_ok && x < P.size(); ++x) {
    const auto dx = *D.poset.index_of(P.poset.key(x));
    for (std::size_t y = 0; y < P.size(); ++y)
      if (P.poset.leq(x, y) != D.poset.leq(dx, *D.poset.index_of(P.poset.key(y)))) p_order_ok = false;
  }
  // Pairs ordered by domination but not by suppression.
  std::size_t dominated = 0, unreachable = 0;
  for (std::size_t x = 0; x < D.size(); ++x)
    for (std::size_t y = 0; y < D.size(); ++y)
      if (M.poset.leq(fmap[x], fmap[y])) {
        ++dominated;
        if (!D.poset.leq(x, y)) ++unreachable;
      }
  std::ostringstream os;
  os << "|D|=" << D.size() << " |M|=" << M.size() << " rho " << to_string(rep.kind)
     << (rep.surjective ? ", surjective" : ", not surjective")
     << (rep.injective ? ", injective" : ", not injective")
     << "; regular part equals P: " << (p_order_ok ? "yes" : "no")
     << "; dominated pairs not suppression-related: " << unreachable << "/" << dominated;
  const bool ok = rep.order_preserving && rep.surjective && p_order_ok;
  return verdict(ok, os.str(), rep.counterexample);
}

PointResult check_tau(const GridPoint& g, const Limits& limits) {
  const int n = g.get("n"), k = g.get("k");
  if (n < 4 || k < 1) return skip("needs n >= 4 and k >= 1");
  const auto S = build_S(n, k, limits);
  const auto M = build_M(n, k, 0, limits);
  std::vector<std::string> images;
  for (const auto& d : S.items) {
    const auto A = tau(d);
    if (!(tau_inverse(A) == d)) return verdict(false, "tau_inverse(tau(S)) != S", to_string(d));
    images.push_back(matrix_key(A));
  }
  std::string missing;
  const auto fmap = map_by_key(images, M.poset, missing);
  if (fmap.empty() && !images.empty()) return verdict(false, "tau leaves M_{n,k}", missing);
  const auto rep = check_order_map(fmap, S.poset, M.poset, limits.max_elements);
  return verdict(rep.kind == MapKind::isomorphism,
                 "|S|=" + std::to_string(S.size()) + " tau " + to_string(rep.kind),
                 rep.counterexample);
}

Diagonal parse_diagonal(const std::string& label) {
  const auto dash = label.find('-');
  return {std::stoi(label.substr(0, dash)), std::stoi(label.substr(dash + 1))};
}

PointResult check_theta(const GridPoint& g, const Limits& limits) {
  const int m = g.get("m"), k = g.get("k");
  if (m < 4 || k < 1 || m < 2 * k + 1) return skip("needs m >= 4 and m >= 2k + 1");
  const auto T = build_T(m, k, limits.max_faces);
  const auto F = face_poset(T, limits.max_faces);
  const auto So = build_So(m, k, limits);
  std::vector<std::string> images;
  for (const auto& level : T.faces(limits.max_faces))
    for (const auto& face : level) {
      std::vector<Diagonal> diagonals;
      for (int v : face) diagonals.push_back(parse_diagonal(T.labels()[v]));
      images.push_back(diagram_key(theta(diagonals, m, k)));
    }
  std::string missing;
  const auto fmap = map_by_key(images, So.poset, missing);
  if (fmap.empty() && !images.empty()) return verdict(false, "theta leaves S^o", missing);
  const auto rep = check_order_map(fmap, F, So.poset, limits.max_elements);
  const int d = k * (m - 2 * k - 1) - 1;
  const auto h = reduced_homology(T, limits.max_faces);
  const bool sphere = sphere_signature(h, T.dimension(), T.is_pure(), d);
  const std::size_t maximal = So.poset.maximal_elements().size();
  std::ostringstream os;
  os << "faces=" << F.size() << " facets=" << T.facets().size() << " maximal(S^o)=" << maximal
     << " theta " << to_string(rep.kind) << "; sphere signature dim " << d << ": "
     << (sphere ? "yes" : "no");
  const bool ok = rep.kind == MapKind::isomorphism && sphere && maximal == T.facets().size();
  return verdict(ok, os.str(), rep.counterexample.empty() ? format_homology(h) : rep.counterexample);
}

HomologyResult poset_homology(const FinitePoset& p, const Limits& limits) {
  if (p.empty()) return HomologyResult{{HomologyGroup{1, {}}}};
  return order_complex_topology(p, TopologyRoute::automatic, limits).homology;
}

SimplicialComplex poset_complex(const FinitePoset& p) {
  if (p.empty()) return {};
  auto k = as_face_poset_complex(p);
  if (!k) throw std::logic_error("expected a face poset");
  return *k;
}

PointResult check_kappa(const GridPoint& g, const Limits& limits) {
  const int m = g.get("m"), k = g.get("k");
  if (m < 4 || k < 1 || m < 2 * k + 1) return skip("needs m >= 4 and m >= 2k + 1");
  const auto S = build_S(m, k, limits);
  const auto star = build_Sstar(m, k, limits);
  const auto rel = build_So(m, k, limits);
  const auto product = direct_product(adjoin_bottom(star.poset, "0*"), adjoin_bottom(rel.poset, "0o"));
  const auto interval = open_interval_above(product, 0);
  std::vector<std::string> images;
  for (const auto& d : S.items) {
    const auto v = kappa(d, k);
    if (!(kappa_inverse(v, m) == d)) return verdict(false, "kappa is not reversible", to_string(d));
    images.push_back("(" + component_key(v.star) + ", " + component_key(v.relevant) + ")");
  }
  std::string missing;
  const auto fmap = map_by_key(images, interval, missing);
  if (fmap.empty() && !images.empty()) return verdict(false, "kappa leaves the interval", missing);
  const auto rep = check_order_map(fmap, S.poset, interval, limits.max_elements);
  const auto hS = poset_homology(S.poset, limits);
  const auto predicted = join_homology(poset_homology(star.poset, limits), poset_homology(rel.poset, limits));
  const auto direct = reduced_homology(join(poset_complex(star.poset), poset_complex(rel.poset)),
                                       limits.max_faces);
  std::ostringstream os;
  os << "|S|=" << S.size() << " |S*|=" << star.size() << " |So|=" << rel.size() << " kappa "
     << to_string(rep.kind) << "; H(S) " << support_text(hS) << "; join formula "
     << support_text(predicted) << "; explicit join " << support_text(direct);
  const bool ok = rep.kind == MapKind::isomorphism && hS == predicted && hS == direct;
  return verdict(ok, os.str(), rep.counterexample);
}

std::map<std::string, std::vector<std::size_t>> fibers(const std::vector<Diagram>& ds) {
  std::map<std::string, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < ds.size(); ++i) out[matrix_key(block_matrix(ds[i]))].push_back(i);
  return out;
}

std::vector<int> legal_swap_sites(const Diagram& d) {
  const auto deg = d.support_degrees();
  std::vector<int> out;
  for (int s = 1; s < d.length(); ++s)
    if (deg[s] == 1 && deg[s + 1] == 1) {
      bool shared = false;
      for (const auto& a : d.arcs()) shared = shared || (a.lo == s && a.hi == s + 1);
      if (!shared) out.push_back(s);
    }
  return out;
}

PointResult check_equivalence(const GridPoint& g, const Limits&) {
  const int n = g.get("n");
  const auto ds = proper_diagrams(n);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i; j < ds.size(); ++j) {
      ++pairs;
      const bool a = equivalent(ds[i], ds[j]);
      const bool b = equivalent_by_definition(ds[i], ds[j]);
      if (a != b) {
        return verdict(false, "block matrix test disagrees with the arc bijection test",
                       to_string(ds[i]) + " vs " + to_string(ds[j]));
      }
      if (a && block_list(ds[i]).free_sites != block_list(ds[j]).free_sites) {
        return verdict(false, "equivalent diagrams with different block lists",
                       to_string(ds[i]) + " vs " + to_string(ds[j]));
      }
    }
  std::map<Diagram, std::size_t> slot;
  for (std::size_t i = 0; i < ds.size(); ++i) slot.emplace(ds[i], i);
  std::size_t swaps = 0;
  const auto fs = fibers(ds);
  for (const auto& [key, members] : fs) {
    std::set<std::size_t> orbit{members.front()};
    std::vector<std::size_t> queue{members.front()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto& d = ds[queue[head]];
      for (int s : legal_swap_sites(d)) {
        const auto e = swap(d, s);
        ++swaps;
        if (std::abs(crossing_count(e) - crossing_count(d)) != 1 || !(block_matrix(e) == block_matrix(d))) {
          return verdict(false, "swap changed the block matrix or crossings by other than one",
                         to_string(d) + " at " + std::to_string(s));
        }
        const auto idx = slot.at(e);
        if (orbit.insert(idx).second) queue.push_back(idx);
      }
    }
    if (orbit != std::set<std::size_t>(members.begin(), members.end())) {
      return verdict(false, "swap orbit differs from the block matrix fiber", key);
    }
  }
  std::ostringstream os;
  os << ds.size() << " proper diagrams, " << fs.size() << " classes, " << pairs
     << " pairs agree, " << swaps << " swaps checked, orbits equal fibers";
  return verdict(true, os.str());
}

PointResult check_regular_unique(const GridPoint& g, const Limits&) {
  const int n = g.get("n");
  const auto ds = proper_diagrams(n);
  const auto fs = fibers(ds);
  for (const auto& [key, members] : fs) {
    std::vector<std::size_t> regular;
    int min_cross = std::numeric_limits<int>::max();
    for (auto i : members) {
      if (is_regular(ds[i])) regular.push_back(i);
      min_cross = std::min(min_cross, crossing_count(ds[i]));
    }
    if (regular.size() != 1) {
      return verdict(false, "fiber has " + std::to_string(regular.size()) + " regular diagrams", key);
    }
    const auto& reg = ds[regular.front()];
    if (crossing_count(reg) != min_cross) {
      return verdict(false, "regular diagram is not crossing minimal", to_string(reg));
    }
    for (auto i : members) {
      const auto c = canonicalize(ds[i]);
      if (!(c == reg) || !(canonicalize(c) == c)) {
        return verdict(false, "canonicalize misses the regular representative", to_string(ds[i]));
      }
    }
  }
  return verdict(true, std::to_string(ds.size()) + " proper diagrams, " + std::to_string(fs.size()) +
                           " classes, one regular diagram each, canonicalize agrees");
}

PointResult check_dual_matrix(const GridPoint& g, const Limits&) {
  const int n = g.get("n");
  if (n < 3) return skip("needs n >= 3");
  const auto ds = all_diagrams(n);
  for (const auto& d : ds) {
    const auto e = dual(d);
    const int f = static_cast<int>(free_sites(d).size());
    if (!(adjacency_matrix(d) == block_matrix(e))) return verdict(false, "A(S) != B(dual(S))", to_string(d));
    if (e.length() != 2 * n - 1 - f || static_cast<int>(free_sites(e).size()) != n - 1) {
      return verdict(false, "dual has the wrong shape", to_string(d));
    }
    const auto b = blow_up(e);
    if (!(block_matrix(b) == block_matrix(e)) || (!b.is_trivial() && !is_binary(b))) {
      return verdict(false, "blow-up changed the block matrix", to_string(e));
    }
  }
  return verdict(true, std::to_string(ds.size()) + " diagrams: A(S) = B(dual(S)), blow-up keeps B");
}

bool has_parallel_arcs(const Diagram& d) {
  for (const auto& cls : parallel_classes(d))
    if (cls.size() > 1) return true;
  return false;
}

PointResult check_realize(const GridPoint& g, const Limits& limits) {
  const int m = g.get("m"), k = g.get("k"), r = g.get("r");
  if (m < 4 || k < 1 || r < 0) return skip("needs m >= 4, k >= 1, r >= 0");
  const auto ms = enumerate_matrices(m, k, r, limits.max_matrix_search);
  for (const auto& x : ms) {
    const auto d = realize_matrix(x);
    if (!is_proper(d) || !(block_matrix(d) == x)) return verdict(false, "B(realize(M)) != M", matrix_key(x));
    if (x.is_zero_one() && has_parallel_arcs(d)) {
      return verdict(false, "(0,1)-matrix realized with parallel arcs", matrix_key(x));
    }
  }
  return verdict(true, std::to_string(ms.size()) + " matrices realized by proper diagrams");
}

PointResult check_length_bound(const GridPoint& g, const Limits& limits) {
  std::vector<Diagram> ds;
  std::string what;
  if (g.has("n")) {
    ds = proper_diagrams(g.get("n"));
    what = "proper diagrams of length " + std::to_string(g.get("n"));
  } else {
    const PwParams p{g.get("f"), g.get("k"), g.get("r")};
    ds = build_D(p, limits).items;
    what = "members of D(" + p.describe() + ")";
  }
  int worst = std::numeric_limits<int>::min();
  for (const auto& d : ds) {
    const int f = static_cast<int>(free_sites(d).size());
    const int bound = length_bound(f, p_value(block_matrix(d)));
    if (d.length() > bound) return verdict(false, "length bound violated", to_string(d));
    worst = std::max(worst, d.length() - bound);
  }
  return verdict(true, std::to_string(ds.size()) + " " + what + " within the bound (max n - bound = " +
                           std::to_string(ds.empty() ? 0 : worst) + ")");
}

SimplicialComplex cycle(int n) {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({std::to_string(i), std::to_string((i + 1) % n)});
  return SimplicialComplex::from_facets(facets);
}

// Six-vertex triangulation.
SimplicialComplex projective_plane() {
  const std::vector<std::vector<int>> t{{1, 2, 4}, {2, 3, 5}, {3, 1, 6}, {1, 4, 5}, {2, 5, 6},
                                        {3, 6, 4}, {4, 5, 6}, {1, 5, 3}, {2, 6, 1}, {3, 4, 2}};
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : t) facets.push_back({std::to_string(f[0]), std::to_string(f[1]), std::to_string(f[2])});
  return SimplicialComplex::from_facets(facets);
}

PointResult check_join(const GridPoint& g, const Limits& limits) {
  const int m = g.get("m"), k = g.get("k");
  if (m < 4 || k < 1 || m < 2 * k + 1) return skip("needs m >= 4 and m >= 2k + 1");
  const auto A = build_T(m, k, limits.max_faces);
  const auto hA = reduced_homology(A, limits.max_faces);
  const std::vector<std::pair<std::string, SimplicialComplex>> partners{
      {"empty", SimplicialComplex{}}, {"point", simplex(0)},      {"S0", SimplicialComplex::from_facets({{"x"}, {"y"}})},
      {"C4", cycle(4)},              {"simplex2", simplex(2)},   {"RP2", projective_plane()}};
  std::ostringstream os;
  os << "T_{" << m << "," << k << "} joined with";
  for (const auto& [name, B] : partners) {
    const auto direct = reduced_homology(join(A, B), limits.max_faces);
    const auto predicted = join_homology(hA, reduced_homology(B, limits.max_faces));
    if (!(direct == predicted)) {
      return verdict(false, "join formula mismatch with " + name, format_homology(direct));
    }
    os << " " << name;
  }
  os << ": homology matches the join formula";
  return verdict(true, os.str());
}

using CheckFn = std::function<PointResult(const GridPoint&, const Limits&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> fns{
      {"thm11", check_thm11},           {"thm12", check_thm12},
      {"beta", check_beta},             {"rho", check_rho},
      {"tau", check_tau},               {"theta", check_theta},
      {"kappa", check_kappa},           {"equivalence", check_equivalence},
      {"regular-unique", check_regular_unique}, {"dual-matrix", check_dual_matrix},
      {"realize-roundtrip", check_realize},     {"length-bound", check_length_bound},
      {"join", check_join}};
  return fns;
}

}  // namespace

PointResult run_point(const std::string& check, const GridPoint& point, const Limits& limits) {
  auto it = registry().find(check);
  if (it == registry().end()) throw std::invalid_argument("unknown check " + check);
  const auto start = std::chrono::steady_clock::now();
  PointResult r = it->second(point, limits);
  r.params = point.describe();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport run_check(const std::string& check, const std::string& grid,
                             const Limits& limits, int jobs) {
  const auto points = parse_grid(grid);
  VerificationReport report{check, grid, std::vector<PointResult>(points.size())};
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        report.points[i] = run_point(check, points[i], limits);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

std::string render_text(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << "verify " << r.check << " grid=" << r.grid << "\n";
  std::size_t passed = 0, skipped = 0;
  for (const auto& p : r.points) {
    const char* tag = p.skipped ? "SKIP" : p.pass ? "PASS" : "FAIL";
    passed += p.pass;
    skipped += p.skipped;
    os << "  " << p.params << ": " << tag << "  " << p.detail;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", p.seconds);
      os << "  [" << buf << " s]";
    }
    os << "\n";
    if (!p.pass && !p.skipped && !p.counterexample.empty()) {
      os << "    counterexample: " << p.counterexample << "\n";
    }
  }
  os << "summary: " << passed << "/" << r.points.size() - skipped << " points passed";
  if (skipped) os << ", " << skipped << " skipped";
  os << "\nresult: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json render_json(const VerificationReport& r, bool timing) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points) {
    nlohmann::json j{{"params", p.params},
                     {"status", p.skipped ? "skip" : p.pass ? "pass" : "fail"},
                     {"detail", p.detail}};
    if (!p.pass && !p.skipped) j["counterexample"] = p.counterexample;
    if (timing) j["seconds"] = p.seconds;
    points.push_back(std::move(j));
  }
  return {{"schema", 1}, {"check", r.check}, {"grid", r.grid}, {"points", points},
          {"passed", r.passed()}};
}

}  // namespace rnaposet

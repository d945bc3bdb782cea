#include "rnaposet/transform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rnaposet {

namespace {

// Index of the arc supported at site s, or -1. Throws when s supports two.
int arc_at(const Diagram& d, int s) {
  int found = -1;
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    const auto& a = d.arcs()[i];
    if (a.lo == s || a.hi == s) {
      if (found >= 0) {
        throw std::invalid_argument("site " + std::to_string(s) + " supports more than one arc");
      }
      found = static_cast<int>(i);
    }
  }
  return found;
}

int partner(const Arc& a, int s) { return a.lo == s ? a.hi : a.lo; }

Arc make_arc(int x, int y) { return x < y ? Arc{x, y} : Arc{y, x}; }

void require_proper(const Diagram& d, const char* what) {
  if (!is_proper(d)) {
    throw std::invalid_argument(std::string(what) + " needs a proper diagram, got " +
                                to_string(d));
  }
}

Diagram swap_unchecked(const Diagram& d, int s, int ia, int ib) {
  const Arc a = d.arcs()[ia];
  const Arc b = d.arcs()[ib];
  const int r1 = partner(a, s);
  const int r2 = partner(b, s + 1);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < d.arcs().size(); ++i)
    if (static_cast<int>(i) != ia && static_cast<int>(i) != ib) arcs.push_back(d.arcs()[i]);
  arcs.push_back(make_arc(s, r2));
  arcs.push_back(make_arc(s + 1, r1));
  return Diagram(d.length(), std::move(arcs));
}

std::pair<int, int> swap_arcs(const Diagram& d, int s) {
  if (s < 1 || s >= d.length()) {
    throw std::invalid_argument("swap site " + std::to_string(s) + " needs 1 <= s < " +
                                std::to_string(d.length()));
  }
  const int ia = arc_at(d, s);
  const int ib = arc_at(d, s + 1);
  if (ia < 0) throw std::invalid_argument("swap site " + std::to_string(s) + " is free");
  if (ib < 0) throw std::invalid_argument("swap site " + std::to_string(s + 1) + " is free");
  if (ia == ib) {
    throw std::invalid_argument("sites " + std::to_string(s) + " and " + std::to_string(s + 1) +
                                " share the arc " + to_string(d.arcs()[ia]));
  }
  return {ia, ib};
}

}  // namespace

Diagram swap(const Diagram& d, int s) {
  require_proper(d, "swap");
  auto [ia, ib] = swap_arcs(d, s);
  return swap_unchecked(d, s, ia, ib);
}

bool is_strict_swap(const Diagram& d, int s) {
  return crossing_count(swap(d, s)) == crossing_count(d) - 1;
}

CanonicalTrace canonicalize_traced(const Diagram& d) {
  require_proper(d, "canonicalize");
  CanonicalTrace trace{d, {}};
  for (;;) {
    const auto bl = block_list(trace.result);
    const auto& arcs = trace.result.arcs();
    std::vector<int> at(trace.result.length() + 2, -1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      at[arcs[i].lo] = static_cast<int>(i);
      at[arcs[i].hi] = static_cast<int>(i);
    }
    // Leftmost block meeting a local crossing.
    int target = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (!arcs_cross(arcs[i], arcs[j])) continue;
        for (int x : {arcs[i].lo, arcs[i].hi})
          for (int y : {arcs[j].lo, arcs[j].hi}) {
            const int b = bl.block_of(x);
            if (b == bl.block_of(y) && (target == 0 || b < target)) target = b;
          }
      }
    if (target == 0) return trace;
    const auto& block = bl.blocks[target - 1];
    int site = -1;
    for (std::size_t t = 0; t + 1 < block.size(); ++t) {
      const int s = block[t];
      if (arcs_cross(arcs[at[s]], arcs[at[s + 1]])) {
        site = s;
        break;
      }
    }
    if (site < 0) {
      throw std::logic_error("block " + std::to_string(target) + " of " +
                             to_string(trace.result) +
                             " has a local crossing but no crossing adjacent arcs");
    }
    trace.result = swap_unchecked(trace.result, site, at[site], at[site + 1]);
    trace.swap_sites.push_back(site);
  }
}

Diagram canonicalize(const Diagram& d) { return canonicalize_traced(d).result; }

bool equivalent(const Diagram& a, const Diagram& b) {
  require_proper(a, "equivalent");
  require_proper(b, "equivalent");
  return block_matrix(a) == block_matrix(b);
}

std::uint64_t count_free_site_preserving_bijections(const Diagram& a, const Diagram& b) {
  if (a.length() != b.length() || a.arc_count() != b.arc_count()) return 0;
  std::vector<std::vector<int>> ca, cb;
  for (const auto& e : a.arcs()) ca.push_back(covered_free_sites(a, e));
  for (const auto& e : b.arcs()) cb.push_back(covered_free_sites(b, e));
  std::vector<bool> used(cb.size(), false);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == ca.size()) {
      ++count;
      return;
    }
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (used[j] || ca[i] != cb[j]) continue;
      used[j] = true;
      self(self, i + 1);
      used[j] = false;
    }
  };
  extend(extend, 0);
  return count;
}

bool equivalent_by_definition(const Diagram& a, const Diagram& b) {
  require_proper(a, "equivalent_by_definition");
  require_proper(b, "equivalent_by_definition");
  return count_free_site_preserving_bijections(a, b) > 0;
}

Diagram dual(const Diagram& d) {
  const auto deg = d.support_degrees();
  const int n = d.length();
  const int free_count = static_cast<int>(std::count(deg.begin() + 1, deg.end(), 0));
  const int length = 2 * n - 1 - free_count;
  if (length < 2) {
    throw std::invalid_argument("the dual of " + to_string(d) + " would have length " +
                                std::to_string(length));
  }
  // Interleave sites with half-sites, then drop the free sites.
  std::vector<int> image(n + 1, 0);
  int kept = 0;
  for (int s = 1; s <= n; ++s) {
    if (deg[s] > 0) ++kept;
    image[s] = kept + (s - 1);
  }
  std::vector<Arc> arcs;
  for (const auto& a : d.arcs()) arcs.push_back({image[a.lo], image[a.hi]});
  return Diagram(length, std::move(arcs));
}

Diagram blow_up(const Diagram& d) {
  Diagram current = d;
  for (;;) {
    const auto deg = current.support_degrees();
    int s = 0;
    for (int t = 1; t <= current.length(); ++t)
      if (deg[t] >= 2) {
        s = t;
        break;
      }
    if (s == 0) return current;
    const int b = deg[s];
    auto shift = [&](int x) { return x > s ? x + b - 1 : x; };
    std::vector<int> partners;
    std::vector<Arc> arcs;
    for (const auto& a : current.arcs()) {
      if (a.lo == s || a.hi == s) {
        partners.push_back(partner(a, s));
      } else {
        arcs.push_back({shift(a.lo), shift(a.hi)});
      }
    }
    std::sort(partners.begin(), partners.end());
    for (int i = 0; i < b; ++i) arcs.push_back(make_arc(s + i, shift(partners[i])));
    current = Diagram(current.length() + b - 1, std::move(arcs));
  }
}

namespace {

// Adds an arc between blocks i < j, each new site going to the right end of
// its block.
Diagram insert_arc_between_blocks(const Diagram& d, int i, int j) {
  const auto bl = block_list(d);
  const int f = bl.free_count();
  auto right_end = [&](int block) { return block <= f ? bl.free_sites[block - 1] : d.length() + 1; };
  const int a = right_end(i);
  const int b = right_end(j);
  auto shift = [&](int x) { return x + (x >= a ? 1 : 0) + (x >= b ? 1 : 0); };
  std::vector<Arc> arcs;
  for (const auto& e : d.arcs()) arcs.push_back({shift(e.lo), shift(e.hi)});
  arcs.push_back({a, b + 1});
  return Diagram(d.length() + 2, std::move(arcs));
}

}  // namespace

Diagram realize_matrix(const SymmetricMatrix& m) {
  const int order = m.order();
  for (int i = 1; i <= order; ++i) {
    if (m.at(i, i) != 0) {
      throw std::invalid_argument("diagonal entry (" + std::to_string(i) + "," +
                                  std::to_string(i) + ") is nonzero");
    }
  }
  if (order >= 2 && m.at(1, order) != 0) {
    throw std::invalid_argument("rainbow entry (1," + std::to_string(order) + ") is nonzero");
  }
  if (m.is_zero()) throw std::invalid_argument("cannot realize the zero matrix");

  SymmetricMatrix stripped(order);
  for (int i = 1; i <= order; ++i)
    for (int j = i + 2; j <= order; ++j)
      if (m.at(i, j) > 0) stripped.set(i, j, 1);
  Diagram current = Diagram::trivial(order);
  if (!stripped.is_zero()) current = tau_inverse(stripped);
  current = blow_up(dual(current));
  for (int i = 1; i < order; ++i)
    if (m.at(i, i + 1) > 0) current = insert_arc_between_blocks(current, i, i + 1);
  for (int i = 1; i <= order; ++i)
    for (int j = i + 1; j <= order; ++j)
      for (int t = 1; t < m.at(i, j); ++t) current = insert_arc_between_blocks(current, i, j);
  return current;
}

std::string PwParams::describe() const {
  return "f=" + std::to_string(f) + ",k=" + std::to_string(k) + ",r=" + std::to_string(r);
}

namespace {

std::string proper_family_violation(const Diagram& d, const PwParams& p) {
  if (!is_proper(d)) return "diagram is not proper";
  const int f = static_cast<int>(free_sites(d).size());
  if (f != p.f) return "diagram has " + std::to_string(f) + " free sites, expected " + std::to_string(p.f);
  if (!is_k_noncrossing(d, p.k)) return "diagram is not " + std::to_string(p.k) + "-noncrossing";
  const int r = tautology_number(d);
  if (r > p.r) return "tautology number " + std::to_string(r) + " exceeds " + std::to_string(p.r);
  return {};
}

}  // namespace

bool in_proper_family(const Diagram& d, const PwParams& p) {
  return proper_family_violation(d, p).empty();
}

std::string regular_family_violation(const Diagram& d, const PwParams& p) {
  auto why = proper_family_violation(d, p);
  if (!why.empty()) return why;
  if (!is_regular(d)) return "diagram is not regular";
  return {};
}

bool in_regular_family(const Diagram& d, const PwParams& p) {
  return regular_family_violation(d, p).empty();
}

SymmetricMatrix beta(const Diagram& d, const PwParams& p) {
  const auto why = regular_family_violation(d, p);
  if (!why.empty()) {
    throw std::invalid_argument(to_string(d) + " is not in P(" + p.describe() + "): " + why);
  }
  return block_matrix(d);
}

Diagram beta_inverse(const SymmetricMatrix& m, const PwParams& p) {
  const auto family = MatrixFamily::tautology(p.f + 1, p.k, p.r);
  if (!belongs_to(m, family)) {
    throw std::invalid_argument(matrix_key(m) + " is not in " + family.describe());
  }
  return canonicalize(realize_matrix(m));
}

SymmetricMatrix tau(const Diagram& d) {
  if (d.is_trivial()) throw std::invalid_argument("tau needs a non-trivial diagram");
  return adjacency_matrix(d);
}

Diagram tau_inverse(const SymmetricMatrix& m) {
  const int order = m.order();
  if (order < 4 || !belongs_to(m, MatrixFamily::zero_one(order))) {
    throw std::invalid_argument(matrix_key(m) + " is not in M_" + std::to_string(order));
  }
  std::vector<Arc> arcs;
  for (int i = 1; i <= order; ++i)
    for (int j = i + 1; j <= order; ++j)
      if (m.at(i, j)) arcs.push_back({i, j});
  return Diagram(order, std::move(arcs));
}

std::string to_string(const Diagonal& d) {
  return std::to_string(d.i) + "-" + std::to_string(d.j);
}

bool is_k_relevant(int i, int j, int m, int k) {
  const int g = std::abs(j - i);
  return k < g && g < m - k;
}

Diagram theta(const std::vector<Diagonal>& face, int m, int k) {
  if (face.empty()) throw std::invalid_argument("theta needs a nonempty face");
  std::vector<Arc> arcs;
  for (const auto& dg : face) {
    if (!is_k_relevant(dg.i, dg.j, m, k) || dg.i < 1 || dg.j > m) {
      throw std::invalid_argument("diagonal " + to_string(dg) + " is not " + std::to_string(k) +
                                  "-relevant in the " + std::to_string(m) + "-gon");
    }
    arcs.push_back(make_arc(dg.i, dg.j));
  }
  Diagram out(m, std::move(arcs));
  if (!is_k_noncrossing(out, k)) {
    throw std::invalid_argument("face has " + std::to_string(k + 1) +
                                " pairwise crossing diagonals");
  }
  return out;
}

std::vector<Diagonal> theta_inverse(const Diagram& d, int k) {
  if (d.is_trivial()) throw std::invalid_argument("theta_inverse needs a non-trivial diagram");
  std::vector<Diagonal> out;
  for (const auto& a : d.arcs()) {
    if (!is_k_relevant(a.lo, a.hi, d.length(), k)) {
      throw std::invalid_argument("arc " + to_string(a) + " is not " + std::to_string(k) +
                                  "-relevant");
    }
    out.push_back({a.lo, a.hi});
  }
  return out;
}

KappaValue kappa(const Diagram& d, int k) {
  std::vector<Arc> star, relevant;
  for (const auto& a : d.arcs())
    (is_k_relevant(a.lo, a.hi, d.length(), k) ? relevant : star).push_back(a);
  KappaValue v{Bottom::star, Bottom::relevant};
  if (!star.empty()) v.star = Diagram(d.length(), std::move(star));
  if (!relevant.empty()) v.relevant = Diagram(d.length(), std::move(relevant));
  return v;
}

std::string component_key(const KappaComponent& c) {
  if (const auto* b = std::get_if<Bottom>(&c)) return *b == Bottom::star ? "0*" : "0o";
  return diagram_key(std::get<Diagram>(c));
}

Diagram kappa_inverse(const KappaValue& v, int m) {
  std::vector<Arc> arcs;
  for (const auto* c : {&v.star, &v.relevant})
    if (const auto* d = std::get_if<Diagram>(c)) arcs.insert(arcs.end(), d->arcs().begin(), d->arcs().end());
  if (arcs.empty()) throw std::invalid_argument("kappa_inverse of the double bottom");
  return Diagram(m, std::move(arcs));
}

}  // namespace rnaposet

#include <doctest.h>

#include <map>

#include "rnaposet/complex.hpp"
#include "rnaposet/families.hpp"
#include "rnaposet/transform.hpp"
#include "rnaposet/verify.hpp"

using namespace rnaposet;

namespace {

// Every diagram on n sites in which each site supports at most one arc.
std::vector<Diagram> binary_diagrams(int n) {
  std::vector<Diagram> out;
  std::vector<bool> used(n + 1, false);
  std::vector<Arc> arcs;
  auto go = [&](auto&& self, int s) -> void {
    if (s > n) {
      out.emplace_back(n, arcs);
      return;
    }
    self(self, s + 1);
    if (used[s]) return;
    for (int t = s + 2; t <= n; ++t) {
      if (used[t] || t - s >= n - 1) continue;
      used[s] = used[t] = true;
      arcs.push_back({s, t});
      self(self, s + 1);
      arcs.pop_back();
      used[s] = used[t] = false;
    }
  };
  go(go, 1);
  return out;
}

long long alternating_faces(const SimplicialComplex& c) {
  long long chi = 0, sign = 1;
  for (auto n : c.f_vector()) {
    chi += sign * static_cast<long long>(n);
    sign = -sign;
  }
  return chi;
}

long long euler_from_homology(const HomologyResult& h) {
  // Reduced Euler characteristic plus the empty face.
  return h.reduced_euler() + 1;
}

}  // namespace

TEST_CASE("diagram invariants, all arc sets up to length 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& d : all_diagrams(n)) {
      CHECK(parse_diagram(to_string(d)) == d);
      CHECK(crossing_count(d) >= local_crossing_count(d));
      const auto B = block_matrix(d);
      CHECK(B.order() == static_cast<int>(free_sites(d).size()) + 1);
      if (d.is_trivial()) continue;
      const bool proper = is_proper(d);
      if (proper && is_binary(d)) CHECK(is_regular(d) == (local_crossing_count(d) == 0));
      if (!is_binary(d)) CHECK_FALSE(is_regular(d));
    }
}

TEST_CASE("binary diagrams up to length 9") {
  std::size_t seen = 0;
  for (int n = 4; n <= 9; ++n)
    for (const auto& d : binary_diagrams(n)) {
      if (d.is_trivial()) continue;
      ++seen;
      const auto B = block_matrix(d);
      const auto blocks = block_list(d);
      for (int i = 1; i <= B.order(); ++i) {
        int row = B.at(i, i);
        for (int j = 1; j <= B.order(); ++j) row += B.at(i, j);
        CHECK(row == static_cast<int>(blocks.blocks[i - 1].size()));
      }
      for (int k = 1; k <= 3; ++k) {
        if (is_k_noncrossing(d, k)) CHECK(is_k_noncrossing(B, k));
      }
      if (!is_proper(d)) {
        CHECK_FALSE(is_regular(d));
        continue;
      }
      if (is_regular(d)) {
        for (int k = 1; k <= 3; ++k) CHECK(is_k_noncrossing(d, k) == is_k_noncrossing(B, k));
      }
      CHECK(d.length() <= length_bound(blocks.free_count(), p_value(B)));
      const int f = blocks.free_count();
      for (const auto& a : d.arcs()) {
        const auto del = delete_arc(d, a);
        CHECK(del.length() == d.length());
        CHECK(del.arc_count() + 1 == d.arc_count());
        try {
          const auto sup = suppress_arc(d, a);
          CHECK(static_cast<int>(free_sites(sup).size()) == f);
          CHECK(sup.arc_count() + 1 == d.arc_count());
        } catch (const std::invalid_argument&) {
          // The suppressed arc set is no longer a diagram.
        }
      }
    }
  CHECK(seen > 1000);
}

TEST_CASE("regular diagrams are proper") {
  for (int n = 4; n <= 9; ++n)
    for (const auto& d : binary_diagrams(n)) {
      if (d.is_trivial() || local_crossing_count(d) != 0 || !is_proper(d)) continue;
      CHECK(is_regular(d));
    }
  CHECK_FALSE(is_regular(Diagram(6, {{1, 4}, {2, 6}})));
}

TEST_CASE("swap and dual invariants") {
  for (int n = 4; n <= 8; ++n)
    for (const auto& d : proper_diagrams(n)) {
      const auto deg = d.support_degrees();
      for (int s = 1; s < n; ++s) {
        if (deg[s] != 1 || deg[s + 1] != 1 || d.contains({s, s + 1})) continue;
        const auto e = swap(d, s);
        CHECK(block_matrix(e) == block_matrix(d));
        CHECK(block_list(e).blocks == block_list(d).blocks);
        CHECK(equivalent(e, d));
        CHECK(std::abs(crossing_count(e) - crossing_count(d)) == 1);
        CHECK(is_strict_swap(d, s) == (crossing_count(e) < crossing_count(d)));
      }
      const auto c = canonicalize(d);
      CHECK(is_regular(c));
      CHECK(canonicalize(c) == c);
      CHECK(equivalent(c, d));
    }
  for (int n = 3; n <= 7; ++n)
    for (const auto& d : all_diagrams(n)) {
      const auto e = dual(d);
      CHECK(e.length() == 2 * n - 1 - static_cast<int>(free_sites(d).size()));
      CHECK(free_sites(e).size() == static_cast<std::size_t>(n - 1));
      CHECK(block_matrix(blow_up(e)) == block_matrix(e));
    }
}

TEST_CASE("matrix family invariants") {
  const auto m2 = enumerate_matrices(5, 2, 2, Limits{}.max_matrix_search);
  for (const auto& x : m2) {
    bool semi_zero = true;
    for (int i = 1; i < 5; ++i) semi_zero = semi_zero && x.at(i, i + 1) == 0;
    CHECK((r_value(x) == 0) == (x.is_zero_one() && semi_zero));
  }
  const auto m1 = enumerate_matrices(5, 2, 1, Limits{}.max_matrix_search);
  for (const auto& a : m1)
    for (const auto& b : m1) {
      if (!dominated_by(a, b)) continue;
      CHECK(p_value(a) <= p_value(b));
      CHECK(q_value(a) <= q_value(b));
      if (is_k_noncrossing(b, 1)) CHECK(is_k_noncrossing(a, 1));
    }
  for (int m = 4; m <= 6; ++m)
    for (int k = 1; k <= 2; ++k)
      for (int r = 0; r <= 1; ++r) {
        const auto base = enumerate_matrices(m, k, r, Limits{}.max_matrix_search);
        for (const auto& x : base) {
          CHECK(belongs_to(x, MatrixFamily::tautology(m, k, r + 1)));
          CHECK(belongs_to(x, MatrixFamily::tautology(m, k + 1, r)));
          // Single-entry truncations stay in the family.
          for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
              if (x.at(i, j) == 0) continue;
              SymmetricMatrix one(m);
              one.set(i, j, x.at(i, j));
              CHECK(dominated_by(one, x));
              CHECK(belongs_to(one, MatrixFamily::tautology(m, k, r)));
            }
        }
      }
}

TEST_CASE("family posets are pure") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= 2; ++k) {
      CHECK(is_pure(build_S(n, k).poset));
      CHECK(is_pure(build_M(n, k, 0).poset));
      if (n <= 6) CHECK(is_pure(build_M(n, k, 1).poset));
    }
  for (int f = 3; f <= 5; ++f)
    for (int k = 1; 2 * k <= f; ++k) {
      const int base = rank_cardinality(build_P({f, k, 0}).poset);
      for (int r = 1; r <= 2; ++r) {
        const auto s = chain_statistics(build_P({f, k, r}).poset);
        CHECK(s.pure);
        CHECK(s.rank_cardinality == base + r);
        CHECK(s.shortest_maximal_chain == base + r);
      }
    }
}

TEST_CASE("proper families: longest chains track the regular ones") {
  for (int k = 1; k <= 2; ++k)
    for (int r = 0; r <= 1; ++r) {
      const auto s = chain_statistics(build_D({3, k, r}).poset);
      CHECK(s.rank_cardinality == rank_cardinality(build_P({3, k, 0}).poset) + r);
      CHECK(s.pure == (k == 1 || r == 0));
    }
}

TEST_CASE("Euler characteristics and subdivision invariance") {
  std::vector<SimplicialComplex> complexes;
  for (int m = 5; m <= 8; ++m) complexes.push_back(build_T(m, 1));
  complexes.push_back(build_T(8, 2));
  complexes.push_back(order_complex(build_P({5, 1, 0}).poset));
  complexes.push_back(order_complex(build_S(6, 1).poset));
  for (const auto& c : complexes) {
    const auto h = reduced_homology(c);
    CHECK(euler_from_homology(h) == alternating_faces(c));
    CHECK(euler_characteristic(c) == alternating_faces(c));
  }
  for (int m = 5; m <= 7; ++m) {
    const auto T = build_T(m, 1);
    CHECK(reduced_homology(order_complex(face_poset(T))) == reduced_homology(T));
  }
  const auto T72 = build_T(7, 2);
  CHECK(reduced_homology(order_complex(face_poset(T72))) == reduced_homology(T72));
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("f=3..4,k=1/2;m=5,k=1");
  REQUIRE(g.size() == 5);
  CHECK(g[0].describe() == "f=3,k=1");
  CHECK(g[3].describe() == "f=4,k=2");
  CHECK(g[4].get("m") == 5);
  CHECK_THROWS_AS(parse_grid("f"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("f=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("f=3,f=4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid(""), std::invalid_argument);
  for (const auto& c : check_names()) CHECK_NOTHROW(parse_grid(default_grid(c)));
}

TEST_CASE("verification reports") {
  const auto r = run_check("dual-matrix", "n=2..4", Limits{}, 2);
  CHECK(r.passed());
  CHECK(r.points[0].skipped);
  CHECK(render_text(r, false) == render_text(run_check("dual-matrix", "n=2..4", Limits{}, 1), false));
  CHECK(render_json(r, false)["schema"] == 1);
  CHECK_THROWS_AS(run_check("nope", "n=4", Limits{}, 1), std::invalid_argument);
  CHECK(proper_diagrams(6).size() == 15);
  CHECK(all_diagrams(5).size() == 32);
}

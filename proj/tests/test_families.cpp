#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rnaposet/complex.hpp"
#include "rnaposet/families.hpp"
#include "rnaposet/transform.hpp"

using namespace rnaposet;

TEST_CASE("S_{n,k} sizes match arc subset enumeration") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(build_S(n, k).size() == oracle::arc_subset_count(n, k));
    }
  CHECK(build_S(5, 1).size() == 10);
  CHECK(build_S(7, 2).size() == 9087);
}

TEST_CASE("S order is arc inclusion") {
  const auto s = build_S(6, 2);
  for (std::size_t x = 0; x < s.size(); x += 7)
    for (std::size_t y = 0; y < s.size(); y += 5) {
      bool inclusion = true;
      for (const auto& a : s.items[x].arcs()) inclusion = inclusion && s.items[y].contains(a);
      CHECK(s.poset.leq(x, y) == inclusion);
    }
}

TEST_CASE("relevant and irrelevant parts") {
  for (int m = 4; m <= 8; ++m) CHECK(build_Sstar(m, 1).size() == 0);
  CHECK(build_Sstar(6, 2).size() == 63);
  CHECK(build_So(7, 2).size() == 70);
  CHECK(build_Sstar(7, 2).size() == 127);
  for (const auto& d : build_So(7, 2).items)
    for (const auto& a : d.arcs()) CHECK(is_k_relevant(a.lo, a.hi, 7, 2));
}

TEST_CASE("matrix posets") {
  const auto m = build_M(5, 1, 0);
  CHECK(m.size() == 10);
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) CHECK(m.poset.leq(x, y) == dominated_by(m.items[x], m.items[y]));
  CHECK(build_M(6, 2, 1).size() == 4607);
}

TEST_CASE("regular diagram posets") {
  const PwParams p{4, 1, 0};
  const auto P = build_P(p);
  CHECK(P.size() == 10);
  for (const auto& d : P.items) CHECK(in_regular_family(d, p));
  const auto Ps = build_P(p, POrder::suppression);
  CHECK(Ps.poset.keys() == P.poset.keys());
  for (std::size_t x = 0; x < P.size(); ++x) CHECK(Ps.poset.up_set(x) == P.poset.up_set(x));

  const auto beta_map = [&](const LabelledPoset<Diagram>& lp, const LabelledPoset<SymmetricMatrix>& M) {
    std::vector<std::size_t> f;
    for (const auto& d : lp.items) f.push_back(*M.poset.index_of(matrix_key(beta(d, p))));
    return check_order_map(f, lp.poset, M.poset);
  };
  CHECK(beta_map(P, build_M(5, 1, 0)).kind == MapKind::isomorphism);
  CHECK_THROWS_AS(build_P({2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_P({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("proper families and the block matrix map") {
  const auto D1 = build_D({3, 1, 1});
  CHECK(D1.size() == 13);  // k = 1: every proper member is regular
  const auto D2 = build_D({3, 2, 1});
  const auto M2 = build_M(4, 2, 1);
  std::set<std::string> images;
  for (const auto& d : D2.items) images.insert(matrix_key(block_matrix(d)));
  CHECK(images.size() == M2.size());
  CHECK(D2.size() > M2.size());
  for (const auto& d : D2.items) {
    CHECK(d.length() <= length_bound(3, p_value(block_matrix(d))));
    CHECK(in_proper_family(d, {3, 2, 1}));
  }
  CHECK(length_bound(3, 0) == 15);
  CHECK(length_bound(4, 1) == 23);
}

TEST_CASE("suppression closes the families") {
  const auto D = build_D({3, 2, 1});
  const auto lower = suppression_lower_neighbours(D.items, D.poset.keys());
  std::size_t edges = 0;
  for (const auto& l : lower) edges += l.size();
  CHECK(edges > 0);
  for (std::size_t x = 0; x < D.size(); ++x)
    for (auto y : lower[x]) CHECK(D.poset.less(y, x));
}

TEST_CASE("admissible arcs") {
  CHECK(admissible_arcs(4) == std::vector<Arc>{{1, 3}, {2, 4}});
  CHECK(admissible_arcs(6).size() == 9);
}

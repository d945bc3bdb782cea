#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "rnaposet/errors.hpp"
#include "rnaposet/matrix.hpp"

using namespace rnaposet;

namespace {

SymmetricMatrix with(int order, std::vector<std::tuple<int, int, int>> entries) {
  SymmetricMatrix m(order);
  for (auto [i, j, v] : entries) m.set(i, j, v);
  return m;
}

}  // namespace

TEST_CASE("construction and symmetry") {
  auto m = with(4, {{1, 3, 1}, {3, 4, 2}});
  CHECK(m.at(3, 1) == 1);
  CHECK(m.at(4, 3) == 2);
  m.add(3, 4, 1);
  CHECK(m.at(4, 3) == 3);
  CHECK(SymmetricMatrix::from_rows({{0, 1}, {1, 0}}).at(2, 1) == 1);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, 1}, {1}}), std::invalid_argument);
  CHECK(SymmetricMatrix(3).is_zero());
  CHECK(m.rows()[2] == std::vector<int>{1, 0, 0, 3});
}

TEST_CASE("tautology functional") {
  const SymmetricMatrix zero(5);
  CHECK(p_value(zero) == 0);
  CHECK(q_value(zero) == 0);
  CHECK(r_value(zero) == 0);
  const auto a = with(4, {{1, 3, 1}, {3, 4, 2}});
  CHECK(p_value(a) == 1);
  CHECK(q_value(a) == 2);
  CHECK(r_value(a) == 3);
  const auto b = with(4, {{1, 2, 1}, {1, 3, 1}});
  CHECK(p_value(b) == 0);
  CHECK(q_value(b) == 1);
  CHECK(r_value(b) == 1);
}

TEST_CASE("crossing structure") {
  CHECK(index_pairs_cross(1, 3, 2, 4));
  CHECK_FALSE(index_pairs_cross(1, 4, 2, 3));
  CHECK_FALSE(index_pairs_cross(1, 2, 2, 3));
  CHECK(is_k_noncrossing(SymmetricMatrix(6), 1));
  const auto a = with(5, {{1, 3, 1}, {2, 4, 1}});
  CHECK_FALSE(is_k_noncrossing(a, 1));
  CHECK(is_k_noncrossing(a, 2));
  const auto b = with(7, {{1, 4, 1}, {2, 5, 1}, {3, 6, 1}});
  CHECK(max_crossing_entries(b) == 3);
  CHECK_FALSE(is_k_noncrossing(b, 2));
  CHECK(is_k_noncrossing(b, 3));
}

TEST_CASE("domination") {
  const auto small = with(4, {{1, 3, 1}});
  const auto big = with(4, {{1, 3, 1}, {3, 4, 2}});
  CHECK(dominated_by(small, small));
  CHECK(dominated_by(SymmetricMatrix(4), big));
  CHECK(dominated_by(small, big));
  CHECK_FALSE(dominated_by(big, small));
}

TEST_CASE("family membership") {
  const auto b = with(4, {{1, 2, 1}, {1, 3, 1}});
  CHECK(belongs_to(b, MatrixFamily::tautology(4, 1, 1)));
  CHECK_FALSE(belongs_to(b, MatrixFamily::tautology(4, 1, 0)));
  CHECK_FALSE(belongs_to(b, MatrixFamily::zero_one(4)));
  CHECK(belongs_to(with(4, {{1, 3, 1}}), MatrixFamily::zero_one(4)));
  CHECK_FALSE(belongs_to(with(4, {{1, 4, 1}}), MatrixFamily::zero_one(4)));
  CHECK_FALSE(belongs_to(with(4, {{2, 2, 1}, {1, 3, 1}}), MatrixFamily::tautology(4, 1, 3)));
  for (const auto& fam : {MatrixFamily::zero_one(5), MatrixFamily::noncrossing(5, 2),
                          MatrixFamily::tautology(5, 2, 3)})
    CHECK_FALSE(belongs_to(SymmetricMatrix(5), fam));
  CHECK_FALSE(belongs_to(with(5, {{1, 3, 1}, {2, 4, 1}}), MatrixFamily::noncrossing(5, 1)));
  CHECK(belongs_to(with(5, {{1, 3, 1}, {2, 4, 1}}), MatrixFamily::noncrossing(5, 2)));
  CHECK_THROWS_AS(belongs_to(b, MatrixFamily::tautology(3, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(belongs_to(b, MatrixFamily::tautology(4, 0, 0)), std::invalid_argument);
  CHECK(MatrixFamily::tautology(6, 2, 2).describe() == "M^2_{6,2}");
}

TEST_CASE("semi-diagonal entries pay twice") {
  // x_{5,6} = 2 costs 2 in q and 1 in p.
  const auto m = with(6, {{5, 6, 2}});
  CHECK(r_value(m) == 3);
  CHECK_FALSE(belongs_to(m, MatrixFamily::tautology(6, 2, 2)));
}

TEST_CASE("enumeration agrees with exhaustive assignment loops") {
  for (int m = 4; m <= 5; ++m)
    for (int k = 1; k <= 2; ++k)
      for (int r = 0; r <= 2; ++r) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(r);
        const auto got = enumerate_matrices(m, k, r, Limits{}.max_matrix_search);
        CHECK(got.size() == oracle::matrix_family_size(m, k, r));
        CHECK(std::is_sorted(got.begin(), got.end()));
        for (const auto& x : got) CHECK(belongs_to(x, MatrixFamily::tautology(m, k, r)));
      }
  for (int k = 1; k <= 2; ++k)
    for (int r = 0; r <= 1; ++r)
      CHECK(enumerate_matrices(6, k, r, Limits{}.max_matrix_search).size() == oracle::matrix_family_size(6, k, r));
}

TEST_CASE("family sizes") {
  struct Row {
    int m, k;
    std::size_t sizes[3];
  };
  const Row table[] = {{4, 1, {2, 13, 30}},
                       {5, 1, {10, 69, 215}},
                       {5, 2, {31, 239, 911}},
                       {6, 1, {44, 362, 1433}},
                       {6, 2, {447, 4607, 24207}}};
  for (const auto& row : table)
    for (int r = 0; r <= 2; ++r)
      CHECK(enumerate_matrices(row.m, row.k, r, Limits{}.max_matrix_search).size() == row.sizes[r]);
}

TEST_CASE("enumeration honours the search cap") {
  CHECK(predicted_matrix_search(6, 2) > 1000);
  CHECK_THROWS_AS(enumerate_matrices(6, 2, 2, 1000), ResourceLimitError);
}

TEST_CASE("json form") {
  const auto m = with(4, {{1, 3, 1}, {3, 4, 2}});
  CHECK(matrix_key(m) == "[[0,0,1,0],[0,0,0,0],[1,0,0,2],[0,0,2,0]]");
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(matrix_key(m))) == m);
  CHECK(matrix_to_json(m)["order"] == 4);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":[[0,1],[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"order":3,"rows":[[0,1],[1,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":[[0,"a"],[1,0]]})")), std::invalid_argument);
}

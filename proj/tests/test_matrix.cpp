#include <catch2/catch_amalgamated.hpp>

#include "modcone/matrix.hpp"
#include "modcone/rng.hpp"

using namespace modcone;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("matrix rank on knowns") {
  CHECK(matrix_rank(RationalMatrix::identity(2)) == 2);
  CHECK(matrix_rank(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 1);
  CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
  CHECK(matrix_rank(RationalMatrix(3, 5)) == 0);

  // fractional entries go through the same fraction-free path
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 0) = Rational(3, 2);
  m.at(1, 1) = Rational(1, 1);
  CHECK(matrix_rank(m) == 1);
}

TEST_CASE("rank is invariant under transpose on seeded matrices") {
  Rng rng(5150);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational();
    CHECK(matrix_rank(m) == matrix_rank(m.transpose()));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(RationalMatrix::identity(4)) == Rational(1));
  CHECK(determinant(from_rows({{2, 1}, {1, 2}})) == Rational(3));
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})).is_zero());
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), std::invalid_argument);

  // product rule spot check on seeded matrices
  Rng rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    RationalMatrix a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a.at(i, j) = rng.rational();
        b.at(i, j) = rng.rational();
      }
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("nullspace and solve") {
  RationalMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational acc(0);
      for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
      CHECK(acc.is_zero());
    }
  }

  RationalMatrix a = from_rows({{1, 1}, {1, -1}});
  auto res = solve(a, {Rational(3), Rational(1)});
  REQUIRE(res.status == SolveStatus::kUnique);
  CHECK(res.solution[0] == Rational(2));
  CHECK(res.solution[1] == Rational(1));

  auto inconsistent = solve(from_rows({{1, 1}, {1, 1}}), {Rational(0), Rational(1)});
  CHECK(inconsistent.status == SolveStatus::kInconsistent);
  auto under = solve(from_rows({{1, 1}}), {Rational(0)});
  CHECK(under.status == SolveStatus::kUnderdetermined);

  CHECK(is_solvable(a, {Rational(3), Rational(1)}));
  CHECK_FALSE(is_solvable(from_rows({{1, 1}, {1, 1}}), {Rational(0), Rational(1)}));
}

#include <catch2/catch_amalgamated.hpp>

#include "modcone/moduli_local.hpp"
#include "modcone/rng.hpp"

using namespace modcone;

TEST_CASE("ext dimensions") {
  CHECK(ext_dim(2, 1, 1, false) == 1);
  CHECK(ext_dim(2, 1, 1, true) == 2);
  CHECK(ext_dim(3, 1, 2, false) == 4);
  CHECK_THROWS_AS(ext_dim(1, 1, 1, false), std::invalid_argument);

  ExtDims e = ExtDims::of(SplitPoint(2, 1, 2));
  CHECK(e.d[0][0] == 2);
  CHECK(e.d[1][1] == 5);
  CHECK(e.d[0][1] == 2);
  CHECK(e.total() == 11);
}

TEST_CASE("split point validation") {
  CHECK_THROWS_AS(SplitPoint(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SplitPoint(2, 0, 1), std::invalid_argument);
}

TEST_CASE("tangent space dimension") {
  CHECK(tangent_space_dim_case1(SplitPoint(2, 1, 1)) == 3);
  CHECK(tangent_space_dim_case1(SplitPoint(3, 1, 1)) == 7);
  // value confirmed by the brute-force count sum d_ij - g = 11 - 2 = 9
  SplitPoint p(2, 1, 2);
  CHECK(ExtDims::of(p).total() - p.g == 9);
  CHECK(tangent_space_dim_case1(p) == 9);
}

TEST_CASE("segre degree oracle") {
  CHECK(segre_degree_oracle(1, 1) == 1);
  CHECK(segre_degree_oracle(2, 2) == 2);
  CHECK(segre_degree_oracle(3, 3) == 6);
  CHECK(segre_degree_oracle(2, 3) == 3);
}

TEST_CASE("split-point multiplicity with oracle cross-checks") {
  CHECK(multiplicity_case1(SplitPoint(2, 1, 1)) == 1);
  CHECK(multiplicity_case1(SplitPoint(3, 1, 1)) == 2);
  CHECK(multiplicity_case1(SplitPoint(3, 1, 1)) == segre_degree_oracle(2, 2));
  CHECK(multiplicity_case1(SplitPoint(3, 1, 2)) == 20);
  CHECK(multiplicity_case1(SplitPoint(3, 1, 2)) == segre_degree_oracle(4, 4));

  for (unsigned g = 2; g <= 6; ++g)
    for (unsigned r1 = 1; r1 <= 3; ++r1)
      for (unsigned r2 = 1; r2 <= 3; ++r2) {
        SplitPoint p(g, r1, r2);
        unsigned d = r1 * r2 * (g - 1);
        CHECK(multiplicity_case1(p) == segre_degree_oracle(d, d));
        CHECK(multiplicity_case1(p) == multiplicity_case1(SplitPoint(g, r2, r1)));
        CHECK((multiplicity_case1(p) == 1) == (g == 2 && r1 == 1 && r2 == 1));
      }
}

TEST_CASE("tangent cone presentations") {
  ConePresentation smooth = tangent_cone_case1(SplitPoint(2, 1, 1));
  CHECK(smooth.equations.empty());
  CHECK(smooth.free_dim == 2);
  CHECK(smooth.tangent_space_dim == 3);
  CHECK(smooth.declared_multiplicity == 1);

  ConePresentation quadric = tangent_cone_case1(SplitPoint(3, 1, 1));
  CHECK(quadric.ring->size() == 7);
  REQUIRE(quadric.equations.size() == 1);
  // Z_1_1 Z_2_2 - Z_1_2 Z_2_1, a rank-4 quadric
  auto z = [&](unsigned k, unsigned l) {
    return Polynomial::variable(quadric.ring,
                                quadric.ring->index_of("Z_" + std::to_string(k) + "_" + std::to_string(l)));
  };
  CHECK(quadric.equations[0] == z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1));
  CHECK(quadric.free_dim == 3);

  ConePresentation big = tangent_cone_case1(SplitPoint(3, 1, 2));
  CHECK(big.equations.size() == 36);  // C(4,2)^2 minors
  CHECK(big.free_dim == (1 + 4) * 2 + 2 - 3);
  CHECK(big.tangent_space_dim == big.free_dim + 16);

  // variable order: Y block then Z grid, row major
  CHECK(big.variables().front() == "Y_1");
  CHECK(big.variables()[big.free_dim] == "Z_1_1");
  CHECK(big.variables().back() == "Z_4_4");
}

TEST_CASE("segre minors vanish on the parametrization") {
  Rng rng(424242);
  SplitPoint p(3, 1, 2);
  ConePresentation cone = tangent_cone_case1(p);
  const unsigned m = cone.free_dim, d = 4;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Rational> s(d), t(d), point(cone.ring->size());
    for (auto& x : s) x = rng.rational();
    for (auto& x : t) x = rng.rational();
    for (unsigned i = 0; i < m; ++i) point[i] = rng.rational();
    for (unsigned k = 0; k < d; ++k)
      for (unsigned l = 0; l < d; ++l) point[m + k * d + l] = s[k] * t[l];
    for (const Polynomial& eq : cone.equations) CHECK(eq.eval(point).is_zero());
  }
}

TEST_CASE("theta multiplicity") {
  CHECK(theta_multiplicity(2, 1) == 1);
  CHECK(theta_multiplicity(3, 1) == 2);
  CHECK(theta_multiplicity(4, 2) == 12);
  CHECK_THROWS_AS(theta_multiplicity(3, 0), NotOnThetaDivisor);

  for (unsigned g = 2; g <= 6; ++g)
    for (unsigned h = 1; h <= 3; ++h)
      CHECK(theta_multiplicity(g, h) == Integer(h) * multiplicity_case1(SplitPoint(g, 1, 1)));
}

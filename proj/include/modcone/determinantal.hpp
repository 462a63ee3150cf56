#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcone/combinatorics.hpp"
#include "modcone/cone.hpp"
#include "modcone/matrix.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"
#include "modcone/rng.hpp"

namespace modcone {

// Symmetric coefficient matrix of the contraction map whose corank measures
// the nilpotent fiber over the rank-3 locus.
struct CorankMap {
  unsigned g;
  RationalMatrix T;

  CorankMap(unsigned g_, RationalMatrix t) : g(g_), T(std::move(t)) {
    if (T.rows() != g || T.cols() != g)
      throw std::invalid_argument("CorankMap: matrix size must be g x g");
    if (!T.is_symmetric()) throw std::invalid_argument("CorankMap: matrix must be symmetric");
  }
};

// Degree of the locus of g x g symmetric matrices of corank >= r:
// prod_{a=0}^{r-1} C(g+a, r-a) / C(2a+1, a). The rational product must clear
// denominators; anything else is an internal-consistency error.
inline Integer harris_tu_degree(unsigned g, unsigned r) {
  if (r > g) throw std::invalid_argument("harris_tu_degree: requires 0 <= r <= g");
  Rational acc(1);
  for (unsigned a = 0; a < r; ++a)
    acc *= Rational(binomial(g + a, r - a), binomial(2 * a + 1, a));
  if (!acc.is_integer())
    throw std::logic_error("harris_tu_degree: non-integral product");
  return acc.num();
}

// C(g,3) - C(g-3,3) for g >= 3, else 0.
inline unsigned corank_formula(unsigned g) {
  if (g < 2) throw std::invalid_argument("corank_formula: genus must be >= 2");
  if (g < 3) return 0;
  Integer v = binomial(g, 3) - binomial(g - 3, 3);
  return static_cast<unsigned>(v.get_ui());
}

// Corank of the contraction map V^dual (x) wedge^4 V -> wedge^3 V,
// x^ (x) y |-> T(x^) _| y, in the canonical bases. T(e_i^) = sum_k T_{i,k} e_k^
// and e_k _| (e_{j1} ^ ... ^ e_{j4}) = sum_s (-1)^(s-1) [k = j_s] (omit j_s).
inline unsigned corank_bruteforce(const CorankMap& m) {
  const unsigned g = m.g;
  const auto rows3 = subsets(g, 3);
  const auto cols4 = subsets(g, 4);
  std::map<std::vector<unsigned>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows3.size(); ++i) row_index[rows3[i]] = i;

  RationalMatrix a(rows3.size(), static_cast<std::size_t>(g) * cols4.size());
  std::size_t col = 0;
  for (unsigned i = 0; i < g; ++i) {
    for (const auto& J : cols4) {
      for (unsigned s = 0; s < 4; ++s) {
        std::vector<unsigned> K;
        K.reserve(3);
        for (unsigned t = 0; t < 4; ++t)
          if (t != s) K.push_back(J[t]);
        Rational coef = m.T.at(i, J[s]);
        if (s % 2 == 1) coef = -coef;
        if (!coef.is_zero()) a.at(row_index[K], col) += coef;
      }
      ++col;
    }
  }
  return static_cast<unsigned>(rows3.size() - matrix_rank(a));
}

// Seeded symmetric matrix of rank exactly 3: T = G^t D G with D = diag(d1,
// d2, d3, 0, ...) and the three active rows of G independent. Entries stay
// integral so rank computations run on small integers.
inline RationalMatrix random_rank3_symmetric(unsigned g, Rng& rng) {
  if (g < 3) throw std::invalid_argument("random_rank3_symmetric: g must be >= 3");
  while (true) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(g));
    for (auto& r : rows)
      for (auto& x : r) x = rng.range(-3, 3);
    RationalMatrix gmat(3, g);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < g; ++j) gmat.at(i, j) = Rational(rows[i][j]);
    if (matrix_rank(gmat) != 3) continue;
    long d[3];
    for (auto& x : d) {
      do { x = rng.range(-5, 5); } while (x == 0);
    }
    RationalMatrix t(g, g);
    for (unsigned i = 0; i < g; ++i)
      for (unsigned j = 0; j < g; ++j) {
        long v = 0;
        for (unsigned a = 0; a < 3; ++a) v += d[a] * rows[a][i] * rows[a][j];
        t.at(i, j) = Rational(v);
      }
    return t;
  }
}

namespace detail {

struct Rank2TrivialRing {
  RingPtr ring;
  std::map<std::pair<unsigned, unsigned>, std::size_t> idx2;        // i <= j, 0-based
  std::map<std::array<unsigned, 3>, std::size_t> idx3;              // i < j < k
};

// Variables T_i_j (i <= j) in lex order followed by T_i_j_k (i < j < k).
inline Rank2TrivialRing make_rank2_trivial_ring(unsigned g) {
  Rank2TrivialRing r;
  std::vector<std::string> names;
  for (unsigned i = 0; i < g; ++i)
    for (unsigned j = i; j < g; ++j) {
      r.idx2[{i, j}] = names.size();
      names.push_back("T_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  for (unsigned i = 0; i < g; ++i)
    for (unsigned j = i + 1; j < g; ++j)
      for (unsigned k = j + 1; k < g; ++k) {
        r.idx3[{i, j, k}] = names.size();
        names.push_back("T_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                        std::to_string(k + 1));
      }
  r.ring = VarRing::with_order(std::move(names));
  return r;
}

inline Polynomial t2_var(const Rank2TrivialRing& r, unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  return Polynomial::variable(r.ring, r.idx2.at({i, j}));
}

// Canonical skew rewrite: repeated indices collapse to zero, otherwise the
// sorted variable with the permutation sign.
inline Polynomial t3_term(const Rank2TrivialRing& r, std::array<unsigned, 3> t) {
  int sign = sort3(t);
  if (sign == 0) return Polynomial::zero(r.ring);
  Polynomial v = Polynomial::variable(r.ring, r.idx3.at(t));
  return sign < 0 ? -v : v;
}

}  // namespace detail

// Multiplicity of the trivial-bundle point per the closed formula:
// 1 for g = 2, otherwise (1 + corank_formula(g)) * harris_tu_degree(g, g-3).
inline Integer multiplicity_trivial_rank2_value(unsigned g) {
  if (g < 2) throw std::invalid_argument("multiplicity_trivial_rank2: genus must be >= 2");
  if (g == 2) return Integer(1);
  return Integer(1 + corank_formula(g)) * harris_tu_degree(g, g - 3);
}

// Tangent-cone presentation at the trivial bundle: all 4x4 minors of the
// symmetric matrix [T_i_j], all products of two 3-index variables, and every
// instance of the 5-index linear relation, deduplicated after canonical-sign
// normalization (zero instances dropped).
inline ConePresentation tangent_cone_trivial_rank2(unsigned g) {
  if (g < 2) throw std::invalid_argument("tangent_cone_trivial_rank2: genus must be >= 2");
  detail::Rank2TrivialRing r = detail::make_rank2_trivial_ring(g);

  ConePresentation cone;
  cone.ring = r.ring;
  std::set<std::string> seen;
  auto emit = [&](const Polynomial& p) {
    if (p.is_zero()) return;
    Polynomial n = p.normalized_sign();
    if (seen.insert(n.key()).second) cone.equations.push_back(n);
  };

  const auto quads = subsets(g, 4);
  for (std::size_t a = 0; a < quads.size(); ++a)
    for (std::size_t b = a; b < quads.size(); ++b) {
      std::vector<std::vector<Polynomial>> sub(4, std::vector<Polynomial>());
      for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y)
          sub[x].push_back(detail::t2_var(r, quads[a][x], quads[b][y]));
      emit(symbolic_determinant(sub));
    }

  const auto triples = subsets(g, 3);
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a; b < triples.size(); ++b) {
      Polynomial pa = detail::t3_term(r, {triples[a][0], triples[a][1], triples[a][2]});
      Polynomial pb = detail::t3_term(r, {triples[b][0], triples[b][1], triples[b][2]});
      emit(pa * pb);
    }

  for (const auto& q : quads)
    for (unsigned i4 = 0; i4 < g; ++i4) {
      Polynomial rel(r.ring);
      for (unsigned s = 0; s < 4; ++s) {
        std::array<unsigned, 3> rest{};
        unsigned t = 0;
        for (unsigned x = 0; x < 4; ++x)
          if (x != s) rest[t++] = q[x];
        Polynomial term = detail::t2_var(r, q[s], i4) * detail::t3_term(r, rest);
        rel += (s % 2 == 0) ? term : -term;
      }
      emit(rel);
    }

  cone.free_dim = 0;
  cone.declared_multiplicity = multiplicity_trivial_rank2_value(g);
  Integer tsd = binomial(g + 1, 2) + binomial(g, 3);  // Sym^2 V + wedge^3 V
  cone.tangent_space_dim = static_cast<unsigned>(tsd.get_ui());
  cone.validate();
  return cone;
}

// Local data at the trivial bundle of the rank-2, trivial-determinant moduli.
struct Rank2TrivialReport {
  unsigned g = 0;
  unsigned tangent_space_dim = 0;
  unsigned corank_dim = 0;     // dim V_T per the closed formula
  Integer segre_factor = 1;    // d_g^(g-3)
  Integer multiplicity = 1;
  ConePresentation cone;
};

inline Rank2TrivialReport multiplicity_trivial_rank2(unsigned g) {
  if (g < 2) throw std::invalid_argument("multiplicity_trivial_rank2: genus must be >= 2");
  Rank2TrivialReport rep;
  rep.g = g;
  Integer tsd = binomial(g + 1, 2) + binomial(g, 3);
  rep.tangent_space_dim = static_cast<unsigned>(tsd.get_ui());
  rep.corank_dim = corank_formula(g);
  rep.segre_factor = harris_tu_degree(g, g >= 3 ? g - 3 : 0);
  rep.multiplicity = multiplicity_trivial_rank2_value(g);
  rep.cone = tangent_cone_trivial_rank2(g);
  return rep;
}

}  // namespace modcone

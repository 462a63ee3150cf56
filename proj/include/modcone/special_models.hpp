#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcone/combinatorics.hpp"
#include "modcone/cone.hpp"
#include "modcone/determinantal.hpp"
#include "modcone/matrix.hpp"
#include "modcone/moduli_local.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"

namespace modcone {

struct LocalModel {
  std::string name;
  ConePresentation presentation;
};

enum class Su3Case { kTorus, kTwoSummand };
enum class CobleCase { kTrivial, kSplit };

// Local models of the rank-3, genus-2, trivial-determinant moduli space at
// its non-stable points.
inline LocalModel su3_genus2_local_model(Su3Case c) {
  if (c == Su3Case::kTwoSummand) {
    LocalModel m{"su3_genus2_two_summand", tangent_cone_case1(SplitPoint(2, 1, 2))};
    return m;
  }
  // Torus case: four free diagonal coordinates and the five invariant
  // coordinates with the single cubic-quadric relation X4 X5 = X1 X2 X3.
  std::vector<std::string> names;
  for (unsigned i = 1; i <= 4; ++i) names.push_back("Y_" + std::to_string(i));
  for (unsigned i = 1; i <= 5; ++i) names.push_back("X_" + std::to_string(i));
  RingPtr ring = VarRing::with_order(std::move(names));
  auto x = [&](unsigned i) { return Polynomial::variable(ring, 4 + (i - 1)); };

  LocalModel m;
  m.name = "su3_genus2_torus";
  m.presentation.ring = ring;
  m.presentation.equations.push_back(x(4) * x(5) - x(1) * x(2) * x(3));
  m.presentation.free_dim = 4;
  m.presentation.declared_multiplicity = 2;  // initial form X4 X5, a rank-2 quadric
  m.presentation.tangent_space_dim = 9;
  m.presentation.validate();
  return m;
}

namespace detail {

struct CobleChart {
  RingPtr ring;                                  // T, T_1_1, T_1_2, T_1_3, T_2_2, T_2_3, T_3_3
  std::map<std::pair<unsigned, unsigned>, std::size_t> sidx;  // 0-based (i <= j) -> var index
};

inline CobleChart make_coble_chart(const std::array<unsigned, 3>& perm) {
  CobleChart c;
  std::vector<std::string> names{"T"};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i; j < 3; ++j) {
      c.sidx[{i, j}] = names.size();
      names.push_back("T_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  c.ring = VarRing::with_order(std::move(names));
  // relabeled entry lookup: S(i, j) = T_{perm(i) perm(j)}
  std::map<std::pair<unsigned, unsigned>, std::size_t> relabeled;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i; j < 3; ++j) {
      unsigned a = perm[i], b = perm[j];
      if (a > b) std::swap(a, b);
      relabeled[{i, j}] = c.sidx.at({a, b});
    }
  c.sidx = relabeled;
  return c;
}

inline Polynomial coble_entry(const CobleChart& c, unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  return Polynomial::variable(c.ring, c.sidx.at({i, j}));
}

inline Polynomial coble_quartic_local(const CobleChart& c) {
  std::vector<std::vector<Polynomial>> s(3, std::vector<Polynomial>());
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) s[i].push_back(coble_entry(c, i, j));
  Polynomial t = Polynomial::variable(c.ring, 0);
  return t * t - symbolic_determinant(s);
}

}  // namespace detail

// Local models of the Coble quartic for a non-hyperelliptic genus-3 curve.
inline LocalModel coble_local_model(CobleCase c) {
  if (c == CobleCase::kSplit) {
    return {"coble_split", tangent_cone_case1(SplitPoint(3, 1, 1))};
  }
  detail::CobleChart chart = detail::make_coble_chart({0, 1, 2});
  LocalModel m;
  m.name = "coble_trivial";
  m.presentation.ring = chart.ring;
  m.presentation.equations.push_back(detail::coble_quartic_local(chart));
  m.presentation.free_dim = 0;
  m.presentation.declared_multiplicity = 2;  // initial form T^2
  m.presentation.tangent_space_dim = 7;
  m.presentation.validate();
  return m;
}

// Degree-bounded ideal membership by exact linear algebra: target must be a
// combination sum q_i g_i with deg q_i <= deg(target) - mindeg(g_i).
inline bool ideal_contains(const std::vector<Polynomial>& gens, const Polynomial& target) {
  if (target.is_zero()) return true;
  RingPtr ring = target.ring();
  const unsigned dmax = target.total_degree();

  std::vector<Polynomial> columns;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring))
      throw std::invalid_argument("ideal_contains: mixed rings");
    unsigned dg = g.min_degree();
    for (unsigned dm = 0; dg + dm <= dmax; ++dm)
      for (const ExponentVec& e : monomials_of_degree(static_cast<unsigned>(ring->size()), dm))
        columns.push_back(g * Polynomial::monomial(ring, e, Rational(1)));
  }
  std::map<ExponentVec, std::size_t> rows;
  auto row_of = [&](const ExponentVec& e) {
    auto it = rows.find(e);
    if (it == rows.end()) it = rows.emplace(e, rows.size()).first;
    return it->second;
  };
  for (const Polynomial& c : columns)
    for (const auto& [e, coef] : c.terms()) row_of(e);
  for (const auto& [e, coef] : target.terms()) row_of(e);

  RationalMatrix a(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [e, coef] : columns[c].terms()) a.at(rows.at(e), c) = coef;
  std::vector<Rational> b(rows.size());
  for (const auto& [e, coef] : target.terms()) b[rows.at(e)] = coef;
  return is_solvable(a, b);
}

// Two-sided containment between the ideal of partials of T^2 - det(S) and
// (T, 2x2 minors of S), checked by explicit membership. The permutation
// relabels the three index symbols of S.
inline bool kummer_partials_check(const std::array<unsigned, 3>& perm = {0, 1, 2}) {
  detail::CobleChart chart = detail::make_coble_chart(perm);
  Polynomial q = detail::coble_quartic_local(chart);

  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < chart.ring->size(); ++v) partials.push_back(q.partial(v));

  std::vector<Polynomial> tm;
  tm.push_back(Polynomial::variable(chart.ring, 0));
  std::set<std::string> seen;
  for (const auto& rows2 : subsets(3, 2))
    for (const auto& cols2 : subsets(3, 2)) {
      Polynomial minor = detail::coble_entry(chart, rows2[0], cols2[0]) *
                             detail::coble_entry(chart, rows2[1], cols2[1]) -
                         detail::coble_entry(chart, rows2[0], cols2[1]) *
                             detail::coble_entry(chart, rows2[1], cols2[0]);
      Polynomial n = minor.normalized_sign();
      if (!n.is_zero() && seen.insert(n.key()).second) tm.push_back(n);
    }

  for (const Polynomial& p : partials)
    if (!ideal_contains(tm, p)) return false;
  for (const Polynomial& p : tm)
    if (!ideal_contains(partials, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constrained Hilbert-polynomial solving.

struct HilbertSolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentConstraints : HilbertSolveError {
  InconsistentConstraints() : HilbertSolveError("no polynomial satisfies constraints") {}
};
struct InsufficientConstraints : HilbertSolveError {
  InsufficientConstraints() : HilbertSolveError("constraints insufficient") {}
};

struct HilbertConstraint {
  enum class Kind { kValue, kZero, kSymmetry };
  Kind kind;
  Rational at;      // for kValue / kZero
  Rational value;   // for kValue
  Rational center;  // for kSymmetry: P(n) = P(2c - n)

  static HilbertConstraint value_at(Rational at, Rational v) {
    return {Kind::kValue, std::move(at), std::move(v), Rational(0)};
  }
  static HilbertConstraint zero_at(Rational at) {
    return {Kind::kZero, std::move(at), Rational(0), Rational(0)};
  }
  static HilbertConstraint symmetric_about(Rational center) {
    return {Kind::kSymmetry, Rational(0), Rational(0), std::move(center)};
  }
};

// Solves for the unique polynomial of the given degree matching the
// constraints. Value and zero constraints are single linear equations; a
// symmetry constraint contributes one equation per coefficient of
// P(x) - P(2c - x). The (typically overdetermined) system is solved exactly;
// inconsistency and underdetermination are reported as distinct errors.
inline UniPoly constrained_hilbert_solve(unsigned degree,
                                         const std::vector<HilbertConstraint>& constraints) {
  const std::size_t n = degree + 1;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  auto power_row = [&](const Rational& at) {
    std::vector<Rational> r(n);
    Rational p(1);
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = p;
      p *= at;
    }
    return r;
  };

  for (const HilbertConstraint& c : constraints) {
    switch (c.kind) {
      case HilbertConstraint::Kind::kValue:
        rows.push_back(power_row(c.at));
        rhs.push_back(c.value);
        break;
      case HilbertConstraint::Kind::kZero:
        rows.push_back(power_row(c.at));
        rhs.push_back(Rational(0));
        break;
      case HilbertConstraint::Kind::kSymmetry: {
        // coefficient of x^j in P(x) - P(2c - x) must vanish for every j
        Rational twoc = c.center * Rational(2);
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Rational> r(n);
          for (std::size_t k = j; k < n; ++k) {
            // (2c - x)^k contributes C(k, j) (2c)^(k-j) (-1)^j to x^j
            Rational coef = Rational(binomial(k, j));
            Rational p(1);
            for (std::size_t t = 0; t < k - j; ++t) p *= twoc;
            coef *= p;
            if (j % 2 == 1) coef = -coef;
            r[k] = (k == j ? Rational(1) : Rational(0)) - coef;
          }
          rows.push_back(std::move(r));
          rhs.push_back(Rational(0));
        }
        break;
      }
    }
  }

  RationalMatrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
  SolveResult res = solve(a, rhs);
  if (res.status == SolveStatus::kInconsistent) throw InconsistentConstraints();
  if (res.status == SolveStatus::kUnderdetermined) throw InsufficientConstraints();
  return UniPoly(std::move(res.solution));
}

// The Hilbert-polynomial data of the degree computation: symmetry about -3,
// zeros at -5..-1, P(0) = 1, P(1) = 9, degree 8.
inline std::vector<HilbertConstraint> theta_map_hilbert_constraints() {
  std::vector<HilbertConstraint> cs;
  cs.push_back(HilbertConstraint::symmetric_about(Rational(-3)));
  for (long t = -5; t <= -1; ++t) cs.push_back(HilbertConstraint::zero_at(Rational(t)));
  cs.push_back(HilbertConstraint::value_at(Rational(0), Rational(1)));
  cs.push_back(HilbertConstraint::value_at(Rational(1), Rational(9)));
  return cs;
}

inline UniPoly theta_map_hilbert_polynomial() {
  return constrained_hilbert_solve(8, theta_map_hilbert_constraints());
}

// Leading coefficient times 8!; the degree of the finite morphism to P^8.
inline Integer degree_of_theta_map() {
  UniPoly p = theta_map_hilbert_polynomial();
  Rational d = p.coeff(8) * Rational(factorial(8));
  if (!d.is_integer()) throw std::logic_error("degree_of_theta_map: non-integral degree");
  return d.num();
}

}  // namespace modcone

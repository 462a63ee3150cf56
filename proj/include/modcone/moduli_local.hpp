#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcone/combinatorics.hpp"
#include "modcone/cone.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"

namespace modcone {

// Signals an evaluation at a point that does not lie on the theta divisor.
struct NotOnThetaDivisor : std::domain_error {
  NotOnThetaDivisor() : std::domain_error("point not on theta divisor (h = 0)") {}
};

// Non-stable moduli point with two non-isomorphic stable summands, given by
// the genus and the summand ranks.
struct SplitPoint {
  unsigned g, r1, r2;

  SplitPoint(unsigned g_, unsigned r1_, unsigned r2_) : g(g_), r1(r1_), r2(r2_) {
    if (g < 2) throw std::invalid_argument("SplitPoint: genus must be >= 2");
    if (r1 < 1 || r2 < 1) throw std::invalid_argument("SplitPoint: ranks must be >= 1");
  }
};

// dim Ext^1(gr_i, gr_j) = r_i r_j (g-1), plus 1 on the diagonal.
inline unsigned ext_dim(unsigned g, unsigned ri, unsigned rj, bool diagonal) {
  if (g < 2 || ri < 1 || rj < 1) throw std::invalid_argument("ext_dim: invalid arguments");
  return ri * rj * (g - 1) + (diagonal ? 1 : 0);
}

// d[i][j] = dim Ext^1(gr_i, gr_j) for the two summands.
struct ExtDims {
  std::array<std::array<unsigned, 2>, 2> d;

  static ExtDims of(const SplitPoint& p) {
    ExtDims e;
    const unsigned r[2] = {p.r1, p.r2};
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j) e.d[i][j] = ext_dim(p.g, r[i], r[j], i == j);
    return e;
  }

  unsigned total() const { return d[0][0] + d[0][1] + d[1][0] + d[1][1]; }
};

// Zariski tangent space: the trace-kernel diagonal block of dimension
// sum d_ii - g plus the full tensor product of the off-diagonal blocks.
inline unsigned tangent_space_dim_case1(const SplitPoint& p) {
  ExtDims e = ExtDims::of(p);
  return (e.d[0][0] + e.d[1][1] - p.g) + e.d[0][1] * e.d[1][0];
}

// Multiplicity C(2d-2, d-1) with d = r1 r2 (g-1).
inline Integer multiplicity_case1(const SplitPoint& p) {
  unsigned d = p.r1 * p.r2 * (p.g - 1);
  return binomial(2 * d - 2, d - 1);
}

// Degree of the Segre embedding of P^(a-1) x P^(b-1), computed without the
// binomial closed form: sample the Hilbert function
// H(n) = C(n+a-1, a-1) C(n+b-1, b-1) at n = 0..a+b-2, interpolate the
// degree-(a+b-2) polynomial exactly and return leading coefficient * (a+b-2)!.
inline Integer segre_degree_oracle(unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw std::invalid_argument("segre_degree_oracle: a, b >= 1");
  const unsigned d = a + b - 2;
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(d + 1);
  for (unsigned n = 0; n <= d; ++n) {
    Integer h = binomial(n + a - 1, a - 1) * binomial(n + b - 1, b - 1);
    pts.emplace_back(Rational(static_cast<long>(n)), Rational(h));
  }
  UniPoly p = interpolate(pts);
  Rational deg = p.coeff(d) * Rational(factorial(d));
  if (!deg.is_integer())
    throw std::logic_error("segre_degree_oracle: non-integral degree");
  return deg.num();
}

// Cone over the Segre variety times the smooth diagonal factor: free
// coordinates Y_1..Y_m, grid coordinates Z_k_l, equations the 2x2 minors.
inline ConePresentation tangent_cone_case1(const SplitPoint& p) {
  ExtDims e = ExtDims::of(p);
  const unsigned m = e.d[0][0] + e.d[1][1] - p.g;
  const unsigned d12 = e.d[0][1], d21 = e.d[1][0];

  std::vector<std::string> names;
  names.reserve(m + d12 * d21);
  for (unsigned i = 1; i <= m; ++i) names.push_back("Y_" + std::to_string(i));
  for (unsigned k = 1; k <= d12; ++k)
    for (unsigned l = 1; l <= d21; ++l)
      names.push_back("Z_" + std::to_string(k) + "_" + std::to_string(l));
  RingPtr ring = VarRing::with_order(std::move(names));

  auto z = [&](unsigned k, unsigned l) {  // 1-based grid position
    return Polynomial::variable(ring, m + (k - 1) * d21 + (l - 1));
  };

  ConePresentation cone;
  cone.ring = ring;
  for (unsigned k = 1; k <= d12; ++k)
    for (unsigned kp = k + 1; kp <= d12; ++kp)
      for (unsigned l = 1; l <= d21; ++l)
        for (unsigned lp = l + 1; lp <= d21; ++lp)
          cone.equations.push_back(z(k, l) * z(kp, lp) - z(k, lp) * z(kp, l));
  cone.free_dim = m;
  cone.declared_multiplicity = multiplicity_case1(p);
  cone.tangent_space_dim = tangent_space_dim_case1(p);
  cone.validate();
  return cone;
}

// h * C(2g-4, g-2); h = dim H^0(X, gr_1) is caller supplied, h = 0 means the
// point is off the theta divisor.
inline Integer theta_multiplicity(unsigned g, unsigned h) {
  if (g < 2) throw std::invalid_argument("theta_multiplicity: genus must be >= 2");
  if (h == 0) throw NotOnThetaDivisor();
  return Integer(h) * binomial(2 * g - 4, g - 2);
}

}  // namespace modcone

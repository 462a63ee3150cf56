#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcone/combinatorics.hpp"
#include "modcone/matrix.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"
#include "modcone/rng.hpp"

namespace modcone {

// Torus action on the arrow variables X_{i,j} of an N-summand graded object:
// (alpha . X)_{i,j} = (alpha_i / alpha_j) X_{i,j}, with d_{i,j} parallel
// copies of each arrow.
struct TorusActionSpec {
  unsigned n_summands = 0;
  std::map<std::pair<unsigned, unsigned>, unsigned> multiplicity;  // (i,j) 0-based, i != j

  struct Var {
    unsigned from, to, copy;  // copy is 1-based
  };

  static TorusActionSpec complete(unsigned n, unsigned d) {
    if (n < 2) throw std::invalid_argument("TorusActionSpec: at least two summands");
    TorusActionSpec s;
    s.n_summands = n;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (i != j) s.multiplicity[{i, j}] = d;
    return s;
  }

  // Arrow variables in lexicographic (from, to, copy) order.
  std::vector<Var> vars() const {
    std::vector<Var> v;
    for (const auto& [arrow, d] : multiplicity)
      for (unsigned k = 1; k <= d; ++k) v.push_back({arrow.first, arrow.second, k});
    return v;
  }

  RingPtr ring() const {
    std::vector<std::string> names;
    bool any_multi = false;
    for (const auto& [arrow, d] : multiplicity) any_multi |= d > 1;
    for (const Var& v : vars()) {
      std::string n = "X_" + std::to_string(v.from + 1) + "_" + std::to_string(v.to + 1);
      if (any_multi) n += "_" + std::to_string(v.copy);
      names.push_back(std::move(n));
    }
    return VarRing::with_order(std::move(names));
  }
};

// In-flow equals out-flow at every node.
inline bool invariance_condition(const ExponentVec& exp, const TorusActionSpec& spec) {
  const auto vars = spec.vars();
  if (exp.size() != vars.size())
    throw std::invalid_argument("invariance_condition: exponent length mismatch");
  std::vector<long> flow(spec.n_summands, 0);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    flow[vars[v].from] += exp[v];
    flow[vars[v].to] -= exp[v];
  }
  return std::all_of(flow.begin(), flow.end(), [](long f) { return f == 0; });
}

namespace detail {

inline bool divides(const ExponentVec& a, const ExponentVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Clears denominators, divides out integer content, normalizes the sign of
// the first stored term.
inline Polynomial integer_normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer l(1);
  for (const auto& [e, c] : p.terms()) {
    Integer d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Integer g(0);
  for (const auto& [e, c] : p.terms()) {
    Integer n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Polynomial q = p * Rational(l, g);
  return q.normalized_sign();
}

// Incremental RREF basis of a subspace of Q^n.
class RowReducer {
 public:
  explicit RowReducer(std::size_t n) : n_(n) {}

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      Rational f = c;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  // Reduces v against the basis; inserts the residue when nonzero.
  // Returns the residue (empty-normalized to zero vector when dependent).
  std::vector<Rational> insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::size_t p = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (!v[j].is_zero()) { p = j; break; }
    if (p == n_) return v;
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational f = rows_[r][p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(v);
    pivots_.push_back(p);
    return v;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

// Minimal monomial generators of the invariant ring, certified up to the
// degree bound: enumerate invariant monomials by increasing (degree, lex) and
// keep those not divisible by an earlier generator.
inline std::vector<ExponentVec> invariant_monomial_hilbert_basis(const TorusActionSpec& spec,
                                                                 unsigned degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("hilbert basis: degree bound must be >= 1");
  const std::size_t nvars = spec.vars().size();
  std::vector<ExponentVec> basis;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    for (const ExponentVec& e : monomials_of_degree(nvars, d)) {
      if (!invariance_condition(e, spec)) continue;
      bool decomposable = false;
      for (const ExponentVec& b : basis)
        if (detail::divides(b, e)) { decomposable = true; break; }
      if (!decomposable) basis.push_back(e);
    }
  }
  return basis;
}

// Whether every invariant monomial of degree <= max_degree factors into
// basis elements; certifies completeness of a degree-bounded basis.
inline bool basis_decomposition_check(const TorusActionSpec& spec,
                                      const std::vector<ExponentVec>& basis,
                                      unsigned max_degree) {
  const std::size_t nvars = spec.vars().size();
  std::map<ExponentVec, bool> memo;
  std::function<bool(const ExponentVec&)> decomposes = [&](const ExponentVec& e) -> bool {
    if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) return true;
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const ExponentVec& b : basis) {
      if (!detail::divides(b, e)) continue;
      ExponentVec rest(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - b[i];
      if (decomposes(rest)) { ok = true; break; }
    }
    memo[e] = ok;
    return ok;
  };
  for (unsigned d = 1; d <= max_degree; ++d)
    for (const ExponentVec& e : monomials_of_degree(nvars, d))
      if (invariance_condition(e, spec) && !decomposes(e)) return false;
  return true;
}

// Generators of the toric ideal of relations among the given invariant
// monomials, found degree by degree: at each ambient X-degree the kernel of
// the monomial-substitution map is computed by exact linear algebra and
// reduced modulo multiples of the relations already found.
inline std::vector<Polynomial> toric_relations(const TorusActionSpec& spec,
                                               const std::vector<ExponentVec>& generators,
                                               unsigned x_degree_bound) {
  for (const ExponentVec& e : generators)
    if (!invariance_condition(e, spec))
      throw std::invalid_argument("toric_relations: generators must be invariant monomials");

  const std::size_t s = generators.size();
  std::vector<std::string> znames;
  for (std::size_t i = 1; i <= s; ++i) znames.push_back("z" + std::to_string(i));
  RingPtr zring = VarRing::with_order(std::move(znames));

  std::vector<unsigned> xdeg(s);
  for (std::size_t i = 0; i < s; ++i)
    xdeg[i] = std::accumulate(generators[i].begin(), generators[i].end(), 0u);

  // zeta exponent vectors of weighted degree exactly d
  std::function<void(unsigned, std::size_t, ExponentVec&, std::vector<ExponentVec>&)> enum_wdeg =
      [&](unsigned d, std::size_t pos, ExponentVec& cur, std::vector<ExponentVec>& out) {
        if (pos == s) {
          if (d == 0) out.push_back(cur);
          return;
        }
        for (unsigned k = 0; k * xdeg[pos] <= d; ++k) {
          cur[pos] = k;
          enum_wdeg(d - k * xdeg[pos], pos + 1, cur, out);
        }
        cur[pos] = 0;
      };

  auto substitute = [&](const ExponentVec& ze) {
    ExponentVec xe(generators.empty() ? 0 : generators[0].size(), 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t v = 0; v < xe.size(); ++v) xe[v] += ze[i] * generators[i][v];
    return xe;
  };

  std::vector<Polynomial> found;
  std::vector<unsigned> found_deg;

  for (unsigned d = 1; d <= x_degree_bound; ++d) {
    std::vector<ExponentVec> zmons;
    ExponentVec cur(s, 0);
    enum_wdeg(d, 0, cur, zmons);
    std::sort(zmons.begin(), zmons.end());
    if (zmons.size() < 2) continue;

    std::map<ExponentVec, std::size_t> zindex;
    for (std::size_t i = 0; i < zmons.size(); ++i) zindex[zmons[i]] = i;

    std::map<ExponentVec, std::size_t> xrow;
    for (const ExponentVec& z : zmons) {
      ExponentVec xe = substitute(z);
      if (!xrow.count(xe)) {
        std::size_t next = xrow.size();
        xrow[xe] = next;
      }
    }
    RationalMatrix m(xrow.size(), zmons.size());
    for (std::size_t c = 0; c < zmons.size(); ++c) m.at(xrow[substitute(zmons[c])], c) = Rational(1);

    auto kernel = nullspace(m);
    if (kernel.empty()) continue;

    detail::RowReducer span(zmons.size());
    for (std::size_t r = 0; r < found.size(); ++r) {
      if (found_deg[r] > d) continue;
      std::vector<ExponentVec> mults;
      ExponentVec mcur(s, 0);
      enum_wdeg(d - found_deg[r], 0, mcur, mults);
      for (const ExponentVec& mu : mults) {
        std::vector<Rational> vec(zmons.size());
        for (const auto& [ze, coef] : found[r].terms()) {
          ExponentVec prod(s);
          for (std::size_t i = 0; i < s; ++i) prod[i] = ze[i] + mu[i];
          vec[zindex.at(prod)] += coef;
        }
        span.insert(std::move(vec));
      }
    }

    for (const auto& k : kernel) {
      std::vector<Rational> residue = span.insert(k);
      bool zero = std::all_of(residue.begin(), residue.end(),
                              [](const Rational& r) { return r.is_zero(); });
      if (zero) continue;
      Polynomial rel(zring);
      for (std::size_t c = 0; c < zmons.size(); ++c)
        if (!residue[c].is_zero()) rel.add_term(zmons[c], residue[c]);
      found.push_back(detail::integer_normalized(rel));
      found_deg.push_back(d);
    }
  }
  return found;
}

// Substitutes the generator monomials into a relation over the z-variables,
// yielding a polynomial in the ambient X-variables.
inline Polynomial substitute_generators(const Polynomial& relation,
                                        const std::vector<ExponentVec>& generators,
                                        const RingPtr& xring) {
  Polynomial out(xring);
  for (const auto& [ze, coef] : relation.terms()) {
    ExponentVec xe(xring->size(), 0);
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t v = 0; v < xe.size(); ++v) xe[v] += ze[i] * generators[i][v];
    out.add_term(xe, coef);
  }
  return out;
}

// Generator monomials plus the relations among them for an invariant ring.
struct InvariantPresentation {
  std::vector<ExponentVec> generators;
  std::vector<Polynomial> relations;
  unsigned degree_bound = 0;
  bool decomposition_certified = false;  // basis complete up to 2 * degree_bound

  void validate(const TorusActionSpec& spec) const {
    for (const ExponentVec& g : generators)
      if (!invariance_condition(g, spec))
        throw std::logic_error("InvariantPresentation: non-invariant generator");
    RingPtr xring = spec.ring();
    for (const Polynomial& r : relations)
      if (!substitute_generators(r, generators, xring).is_zero())
        throw std::logic_error("InvariantPresentation: relation does not vanish on generators");
  }
};

inline InvariantPresentation compute_invariant_presentation(const TorusActionSpec& spec,
                                                            unsigned degree_bound,
                                                            unsigned x_degree_bound) {
  InvariantPresentation pres;
  pres.degree_bound = degree_bound;
  pres.generators = invariant_monomial_hilbert_basis(spec, degree_bound);
  pres.relations = toric_relations(spec, pres.generators, x_degree_bound);
  pres.decomposition_certified = basis_decomposition_check(spec, pres.generators, 2 * degree_bound);
  pres.validate(spec);
  return pres;
}

// ---------------------------------------------------------------------------
// SO3 invariants of g vectors: scalar products and triple wedges.

using Vec3 = std::array<Rational, 3>;

struct SO3Table {
  unsigned g = 0;
  std::map<std::array<unsigned, 2>, Rational> t2;  // key i <= j, 0-based
  std::map<std::array<unsigned, 3>, Rational> t3;  // key i < j < k

  Rational dot(unsigned i, unsigned j) const {
    if (i > j) std::swap(i, j);
    return t2.at({i, j});
  }

  // Skew lookup, zero on repeated indices.
  Rational wedge(unsigned i, unsigned j, unsigned k) const {
    std::array<unsigned, 3> t{i, j, k};
    int sign = sort3(t);
    if (sign == 0) return Rational(0);
    Rational v = t3.at(t);
    return sign < 0 ? -v : v;
  }
};

inline SO3Table so3_eval_from_vectors(const std::vector<Vec3>& u) {
  SO3Table t;
  t.g = static_cast<unsigned>(u.size());
  for (unsigned i = 0; i < t.g; ++i)
    for (unsigned j = i; j < t.g; ++j) {
      Rational d(0);
      for (unsigned a = 0; a < 3; ++a) d += u[i][a] * u[j][a];
      t.t2[{i, j}] = d;
    }
  for (unsigned i = 0; i < t.g; ++i)
    for (unsigned j = i + 1; j < t.g; ++j)
      for (unsigned k = j + 1; k < t.g; ++k) {
        RationalMatrix m(3, 3);
        for (unsigned a = 0; a < 3; ++a) {
          m.at(0, a) = u[i][a];
          m.at(1, a) = u[j][a];
          m.at(2, a) = u[k][a];
        }
        t.t3[{i, j, k}] = determinant(m);
      }
  return t;
}

namespace detail {

inline std::string tuple_str(const std::vector<unsigned>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i] + 1;
  }
  os << ')';
  return os.str();
}

}  // namespace detail

// Evaluates every relation instance on the table and returns the identifiers
// of the nonzero ones: the 4x4 minors of [t2], the product relations against
// 3x3 Gram determinants, and the 5-index linear relations.
inline std::vector<std::string> so3_verify_relations(const SO3Table& t) {
  std::vector<std::string> violations;
  const unsigned g = t.g;

  const auto quads = subsets(g, 4);
  for (std::size_t a = 0; a < quads.size(); ++a)
    for (std::size_t b = a; b < quads.size(); ++b) {
      RationalMatrix m(4, 4);
      for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y) m.at(x, y) = t.dot(quads[a][x], quads[b][y]);
      if (!determinant(m).is_zero())
        violations.push_back("minor4[" + detail::tuple_str(quads[a]) + "|" +
                             detail::tuple_str(quads[b]) + "]");
    }

  const auto triples = subsets(g, 3);
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a; b < triples.size(); ++b) {
      RationalMatrix m(3, 3);
      for (unsigned x = 0; x < 3; ++x)
        for (unsigned y = 0; y < 3; ++y) m.at(x, y) = t.dot(triples[a][x], triples[b][y]);
      Rational lhs = t.wedge(triples[a][0], triples[a][1], triples[a][2]) *
                     t.wedge(triples[b][0], triples[b][1], triples[b][2]);
      if (lhs != determinant(m))
        violations.push_back("rel1[" + detail::tuple_str(triples[a]) + "|" +
                             detail::tuple_str(triples[b]) + "]");
    }

  for (const auto& q : quads)
    for (unsigned i4 = 0; i4 < g; ++i4) {
      Rational acc(0);
      for (unsigned s = 0; s < 4; ++s) {
        std::array<unsigned, 3> rest{};
        unsigned c = 0;
        for (unsigned x = 0; x < 4; ++x)
          if (x != s) rest[c++] = q[x];
        Rational term = t.dot(q[s], i4) * t.wedge(rest[0], rest[1], rest[2]);
        acc += (s % 2 == 0) ? term : -term;
      }
      if (!acc.is_zero())
        violations.push_back("rel2[" + detail::tuple_str(q) + "|" + std::to_string(i4 + 1) + "]");
    }

  return violations;
}

// ---------------------------------------------------------------------------
// The 2x2 traceless parametrization over Q(i).

using Mat2 = std::array<GaussianRational, 4>;  // row major [a b; c d]

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline GaussianRational mat2_trace(const Mat2& x) { return x[0] + x[3]; }

// Reads off (u1, u2, u3) from X = [u1, u2 - i u3; u2 + i u3, -u1].
inline std::array<GaussianRational, 3> matrix_to_vector(const Mat2& x) {
  if (!(x[0] + x[3]).is_zero()) throw std::invalid_argument("matrix_to_vector: nonzero trace");
  GaussianRational half(Rational(1, 2));
  GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
  return {x[0], (x[1] + x[2]) * half, (x[2] - x[1]) * minus_half_i};
}

inline Mat2 vector_to_matrix(const std::array<GaussianRational, 3>& u) {
  GaussianRational i = GaussianRational::i();
  return {u[0], u[1] - i * u[2], u[1] + i * u[2], -u[0]};
}

inline Mat2 vector_to_matrix(const Vec3& u) {
  return vector_to_matrix(std::array<GaussianRational, 3>{u[0], u[1], u[2]});
}

// ---------------------------------------------------------------------------
// Polarized Cayley-Hamilton trace identity.

// Characteristic polynomial coefficients (ascending, monic) by exact
// Faddeev-LeVerrier recursion.
inline std::vector<Rational> char_poly_faddeev(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  RationalMatrix m = RationalMatrix::identity(n);
  RationalMatrix am = a;
  auto trace = [](const RationalMatrix& x) {
    Rational t(0);
    for (std::size_t i = 0; i < x.rows(); ++i) t += x.at(i, i);
    return t;
  };
  c[n - 1] = -trace(am);
  for (std::size_t k = 2; k <= n; ++k) {
    m = am;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    am = a * m;
    c[n - k] = -(trace(am) / Rational(static_cast<long>(k)));
  }
  return c;
}

// Tr(X . P(X)) for a polynomial given by ascending coefficients.
inline Rational trace_x_px(const RationalMatrix& x, const std::vector<Rational>& coeffs) {
  const std::size_t n = x.rows();
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b.at(i, i) = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    b = b * x;
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += coeffs[k];
  }
  RationalMatrix p = x * b;
  Rational t(0);
  for (std::size_t i = 0; i < n; ++i) t += p.at(i, i);
  return t;
}

using CharPolyFn = std::function<std::vector<Rational>(const RationalMatrix&)>;

// Full polarization of f(X) = Tr(X . P_X(X)) over n+1 arguments by
// inclusion-exclusion over nonempty subsets; true iff every seeded trial
// evaluates to exactly zero.
inline bool polarized_vanishing_with(unsigned n, unsigned trials, std::uint64_t seed,
                                     const CharPolyFn& char_poly) {
  if (n < 1) throw std::invalid_argument("polarized check: matrix size must be >= 1");
  if (trials < 1) throw std::invalid_argument("polarized check: trials must be >= 1");
  Rng rng(seed);
  const unsigned args = n + 1;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::vector<RationalMatrix> h(args, RationalMatrix(n, n));
    for (auto& m : h)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.rational();
    Rational f(0);
    for (unsigned mask = 1; mask < (1u << args); ++mask) {
      RationalMatrix x(n, n);
      unsigned bits = 0;
      for (unsigned i = 0; i < args; ++i)
        if (mask & (1u << i)) { x = x + h[i]; ++bits; }
      Rational term = trace_x_px(x, char_poly(x));
      if ((args - bits) % 2 == 1) term = -term;
      f += term;
    }
    if (!f.is_zero()) return false;
  }
  return true;
}

inline bool verify_polarized_trace_identity(unsigned n, unsigned trials, std::uint64_t seed) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("verify_polarized_trace_identity: n must be 2 or 3");
  return polarized_vanishing_with(n, trials, seed, &char_poly_faddeev);
}

}  // namespace modcone

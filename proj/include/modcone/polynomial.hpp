#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcone/rational.hpp"

namespace modcone {

using ExponentVec = std::vector<unsigned>;

// Ordered list of indeterminate names, fixed at construction and shared by
// every polynomial of the ring. Binary operations require identical lists.
class VarRing {
 public:
  using Ptr = std::shared_ptr<const VarRing>;

  // Default construction path: names sorted lexicographically.
  static Ptr sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    return with_order(std::move(names));
  }

  // Explicit caller-supplied order, used where a presentation fixes its own
  // deterministic variable order.
  static Ptr with_order(std::vector<std::string> names) {
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw std::invalid_argument("VarRing: duplicate variable name");
    return Ptr(new VarRing(std::move(names)));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("VarRing: unknown variable " + name);
  }

  friend bool same_ring(const Ptr& a, const Ptr& b) {
    return a == b || (a && b && a->names_ == b->names_);
  }

 private:
  explicit VarRing(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using RingPtr = VarRing::Ptr;

// Sparse multivariate polynomial with exact rational coefficients, keyed by
// exponent vector. No zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVec, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("Polynomial: null ring");
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_[ExponentVec(p.ring_->size(), 0)] = c;
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.ring_->size()) throw std::invalid_argument("Polynomial: variable index out of range");
    ExponentVec e(p.ring_->size(), 0);
    e[index] = 1;
    p.terms_[std::move(e)] = Rational(1);
    return p;
  }

  static Polynomial monomial(RingPtr ring, ExponentVec exp, const Rational& c) {
    Polynomial p(std::move(ring));
    if (exp.size() != p.ring_->size()) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (!c.is_zero()) p.terms_[std::move(exp)] = c;
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const ExponentVec& exp, const Rational& c) {
    if (exp.size() != ring_->size()) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  // Degree of the lowest-degree term (0 for the zero polynomial).
  unsigned min_degree() const {
    bool first = true;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = std::accumulate(e.begin(), e.end(), 0u);
      if (first || t < d) { d = t; first = false; }
    }
    return d;
  }

  // Lowest-degree homogeneous part.
  Polynomial initial_form() const {
    Polynomial p(ring_);
    if (terms_.empty()) return p;
    unsigned d = min_degree();
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0u) == d) p.terms_[e] = c;
    return p;
  }

  Polynomial operator-() const {
    Polynomial p(ring_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial p(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExponentVec e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial p(a.ring_);
    if (c.is_zero()) return p;
    for (const auto& [e, coef] : a.terms_) p.terms_[e] = coef * c;
    return p;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Formal partial derivative with respect to a variable index.
  Polynomial partial(std::size_t var) const {
    if (var >= ring_->size()) throw std::invalid_argument("partial: variable index out of range");
    Polynomial p(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      ExponentVec d = e;
      --d[var];
      p.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return p;
  }

  Rational eval(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("eval: point size mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  // Scales so the first stored term (lexicographically smallest exponent) has
  // positive coefficient; used for up-to-sign deduplication.
  Polynomial normalized_sign() const {
    if (terms_.empty()) return *this;
    if (terms_.begin()->second.sign() < 0) return -*this;
    return *this;
  }

  // Canonical text form, suitable as a dedup/map key.
  std::string key() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
      os << c.str() << ':';
      for (unsigned x : e) os << x << ',';
      os << ';';
    }
    return os.str();
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << (c.sign() >= 0 ? " + " : " - ");
      else if (c.sign() < 0) os << "-";
      first = false;
      Rational a = c.sign() < 0 ? -c : c;
      bool unit = (a == Rational(1));
      bool wrote = false;
      if (!unit) { os << a.str(); wrote = true; }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << ring_->name(i);
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
      if (!wrote) os << a.str();
    }
    return os.str();
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
      throw std::invalid_argument("Polynomial: operands live in different rings");
  }

  RingPtr ring_;
  TermMap terms_;
};

inline Polynomial poly_partial(const Polynomial& p, const std::string& var) {
  return p.partial(p.ring()->index_of(var));
}

namespace detail {
inline void enumerate_degree_rec(unsigned nvars, unsigned degree, ExponentVec& cur, std::size_t pos,
                                 std::vector<ExponentVec>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned d = 0; d <= degree; ++d) {
    cur[pos] = d;
    enumerate_degree_rec(nvars, degree - d, cur, pos + 1, out);
  }
}
}  // namespace detail

// All exponent vectors of exact total degree d, lexicographically ascending.
inline std::vector<ExponentVec> monomials_of_degree(unsigned nvars, unsigned d) {
  std::vector<ExponentVec> out;
  if (nvars == 0) return out;
  ExponentVec cur(nvars, 0);
  detail::enumerate_degree_rec(nvars, d, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Exact determinant of a square matrix of polynomials, by Laplace expansion
// memoized on (row, column mask).
inline Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("symbolic_determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("symbolic_determinant: non-square matrix");
  RingPtr ring = m[0][0].ring();
  for (const auto& row : m)
    for (const auto& p : row)
      if (!same_ring(ring, p.ring()))
        throw std::invalid_argument("symbolic_determinant: mixed rings");
  if (n > 32) throw std::invalid_argument("symbolic_determinant: matrix too large");

  std::map<std::uint64_t, Polynomial> memo;
  // minor over rows r..n-1 and the columns present in mask
  auto rec = [&](auto&& self, std::size_t r, std::uint64_t mask) -> Polynomial {
    if (r == n) return Polynomial::constant(ring, Rational(1));
    std::uint64_t k = (static_cast<std::uint64_t>(r) << 40) | mask;
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1ULL << j))) continue;
      if (!m[r][j].is_zero()) {
        Polynomial sub = self(self, r + 1, mask & ~(1ULL << j));
        Polynomial term = m[r][j] * sub;
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    memo.emplace(k, acc);
    return acc;
  };
  return rec(rec, 0, (1ULL << n) - 1);
}

// Dense univariate polynomial with rational coefficients, ascending order.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& r) { return UniPoly({r}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + b * Rational(-1);
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // P(a + b x), by Horner over the shifted variable.
  UniPoly compose_affine(const Rational& a, const Rational& b) const {
    UniPoly acc;
    UniPoly lin({a, b});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + UniPoly::constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Exact Lagrange interpolation through distinct nodes.
inline UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  UniPoly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly({-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis * (points[i].second / denom);
  }
  return acc;
}

}  // namespace modcone

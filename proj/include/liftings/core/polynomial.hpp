#pragma once

// Sparse multivariate polynomials over a coefficient ring R.
//
// R is a field (Rational, ModP) or itself a polynomial ring over a field,
// which gives the K[C][x, xn] towers. Terms are stored in a canonical,
// order-independent sequence; head-term queries take the TermOrder as an
// argument.

#include <algorithm>
#include <cstddef>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "liftings/core/field.hpp"
#include "liftings/core/monomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"

namespace liftings {

template <class R>
class Polynomial;

template <class R>
struct Term {
  Monomial m;
  R c;
};

/// The ring R[x_0, ..., x_{n-1}].
template <class R>
struct PolyRing {
  static constexpr bool is_field = false;
  using base_ring_type = typename R::ring_type;

  std::size_t nvars = 0;
  base_ring_type base{};

  PolyRing() = default;
  PolyRing(std::size_t n, base_ring_type b) : nvars(n), base(std::move(b)) {}

  Polynomial<R> zero() const;
  Polynomial<R> one() const;
  Polynomial<R> from_integer(long long n) const;
  Polynomial<R> from_rational(const mpq_class& q) const;
  Polynomial<R> constant(const R& c) const;
  Polynomial<R> variable(std::size_t i) const;
  Polynomial<R> monomial(const R& c, Monomial m) const;
  std::uint64_t characteristic() const { return base.characteristic(); }
  std::string name() const { return base.name() + "[" + std::to_string(nvars) + " vars]"; }
  bool operator==(const PolyRing&) const = default;
};

template <class R>
class Polynomial {
 public:
  using coeff_type = R;
  using ring_type = PolyRing<R>;
  using term_type = Term<R>;

  Polynomial() = default;
  explicit Polynomial(ring_type ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  Polynomial(ring_type ring, std::vector<term_type> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  const ring_type& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.nvars; }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of the constant term (zero if absent).
  R constant_coefficient() const { return coefficient(Monomial(nvars())); }

  R coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const term_type& t, const Monomial& k) { return canonical_less(t.m, k); });
    if (it != terms_.end() && it->m == m) return it->c;
    return ring_.base.zero();
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree() != terms_.front().m.degree()) return false;
    return true;
  }
  template <class Weights>
  bool is_homogeneous(const Weights& w) const {
    if (terms_.empty()) return true;
    long long d = terms_.front().m.weighted_degree(w);
    for (const auto& t : terms_)
      if (t.m.weighted_degree(w) != d) return false;
    return true;
  }

  /// Order-maximal term of the support.
  const term_type& head(const TermOrder& order) const {
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "head term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.compare(terms_[i].m, terms_[best].m) > 0) best = i;
    return terms_[best];
  }
  const Monomial& head_term(const TermOrder& order) const { return head(order).m; }
  const R& head_coefficient(const TermOrder& order) const { return head(order).c; }

  /// Largest r with x_{var}^r dividing the polynomial.
  unsigned variable_power_divisor(std::size_t var) const {
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "power divisor of the zero polynomial");
    unsigned r = Monomial::kMaxExponent;
    for (const auto& t : terms_) r = std::min(r, t.m[var]);
    return r;
  }

  /// Whether variable `var` occurs in some term.
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.m[var] != 0) return true;
    return false;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, true); }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].c, b.terms_[0].m);
    if (a.size() == 1) return b.mul_term(a.terms_[0].c, a.terms_[0].m, true);
    std::vector<term_type> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
    return Polynomial(a.ring_, std::move(prod));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// c * x^m * this (for a scalar on the left, set scalar_left).
  Polynomial mul_term(const R& c, const Monomial& m, bool scalar_left = false) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      R cc = scalar_left ? c * t.c : t.c * c;
      if (!cc.is_zero()) r.terms_.push_back({t.m * m, std::move(cc)});
    }
    // multiplication by a monomial preserves the canonical (lex) order
    return r;
  }
  Polynomial scale(const R& c) const { return mul_term(c, Monomial(nvars()), true); }
  Polynomial shift(const Monomial& m) const { return mul_term(ring_.base.one(), m); }

  Polynomial pow(unsigned e) const {
    Polynomial r = ring_.one(), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars() || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  /// Applies f to every coefficient, dropping zeros. f may return a different
  /// coefficient type S living in `target` coefficient ring.
  template <class S, class F>
  Polynomial<S> map_coefficients(const PolyRing<S>& target, F f) const {
    std::vector<Term<S>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      S c = f(t.c);
      if (!c.is_zero()) out.push_back({t.m, std::move(c)});
    }
    Polynomial<S> r(target);
    r.assign_sorted(std::move(out));
    return r;
  }

  /// Replaces the term list with one that is already canonical and zero-free.
  void assign_sorted(std::vector<term_type> terms) { terms_ = std::move(terms); }

  // Printing hooks used when this polynomial is itself a coefficient.
  bool prints_negative() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.prints_negative(); }
  bool is_atomic() const { return terms_.size() <= 1; }
  std::string to_string() const;

  R content_unit() const { return ring_.base.one(); }

 private:
  void check_ring(const Polynomial& o) const {
    if (nvars() != o.nvars()) fail(ErrorKind::Ring, "polynomials from different rings");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const term_type& a, const term_type& b) { return canonical_less(a.m, b.m); });
    std::vector<term_type> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (t.m.size() != ring_.nvars) fail(ErrorKind::Dimension, "term with wrong number of variables");
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
      } else {
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static Polynomial add(const Polynomial& a, const Polynomial& b, bool negate_b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && canonical_less(a.terms_[i].m, b.terms_[j].m))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || canonical_less(b.terms_[j].m, a.terms_[i].m)) {
        r.terms_.push_back(b.terms_[j]);
        if (negate_b) r.terms_.back().c = -r.terms_.back().c;
        ++j;
      } else {
        R c = negate_b ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  ring_type ring_{};
  std::vector<term_type> terms_;
};

template <class R>
Polynomial<R> PolyRing<R>::zero() const { return Polynomial<R>(*this); }
template <class R>
Polynomial<R> PolyRing<R>::constant(const R& c) const {
  return monomial(c, Monomial(nvars));
}
template <class R>
Polynomial<R> PolyRing<R>::one() const { return constant(base.one()); }
template <class R>
Polynomial<R> PolyRing<R>::from_integer(long long n) const { return constant(base.from_integer(n)); }
template <class R>
Polynomial<R> PolyRing<R>::from_rational(const mpq_class& q) const { return constant(base.from_rational(q)); }
template <class R>
Polynomial<R> PolyRing<R>::variable(std::size_t i) const {
  if (i >= nvars) fail(ErrorKind::Argument, "variable index out of range");
  return monomial(base.one(), Monomial::variable(nvars, i));
}
template <class R>
Polynomial<R> PolyRing<R>::monomial(const R& c, Monomial m) const {
  if (m.size() != nvars) fail(ErrorKind::Dimension, "monomial with wrong number of variables");
  std::vector<Term<R>> t;
  if (!c.is_zero()) t.push_back({std::move(m), c});
  Polynomial<R> p(*this);
  p.assign_sorted(std::move(t));
  return p;
}

/// Largest r with x_last^r dividing every term.
template <class R>
unsigned xn_power_divisor(const Polynomial<R>& f) {
  return f.variable_power_divisor(f.nvars() - 1);
}

/// Divides by x_var^r; requires every term to be divisible.
template <class R>
Polynomial<R> divide_by_variable_power(const Polynomial<R>& f, std::size_t var, unsigned r) {
  Monomial d = Monomial::variable(f.nvars(), var, r);
  std::vector<Term<R>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (!d.divides(t.m)) fail(ErrorKind::Argument, "polynomial not divisible by the requested power");
    out.push_back({d.quotient_of(t.m), t.c});
  }
  return Polynomial<R>(f.ring(), std::move(out));
}

/// Scales the polynomial so that its head coefficient (w.r.t. order) is 1.
template <class K>
Polynomial<K> make_monic(const Polynomial<K>& f, const TermOrder& order) {
  static_assert(K::ring_type::is_field, "make_monic needs a field");
  if (f.is_zero()) return f;
  const K& lc = f.head_coefficient(order);
  if (lc.is_one()) return f;
  return f.scale(lc.inverse());
}

/// Degree of f in one variable.
template <class R>
unsigned degree_in(const Polynomial<R>& f, std::size_t var) {
  unsigned d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.m[var]);
  return d;
}

/// Coefficient of var^k, as a polynomial in the remaining variables (var
/// exponent dropped to zero, ring unchanged).
template <class R>
Polynomial<R> coefficient_in(const Polynomial<R>& f, std::size_t var, unsigned k) {
  std::vector<Term<R>> out;
  for (const auto& t : f.terms())
    if (t.m[var] == k) {
      Monomial m = t.m;
      m.set(var, 0);
      out.push_back({std::move(m), t.c});
    }
  return Polynomial<R>(f.ring(), std::move(out));
}

/// Partial derivative with respect to var.
template <class R>
Polynomial<R> derivative(const Polynomial<R>& f, std::size_t var) {
  std::vector<Term<R>> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.m[var];
    if (e == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.c * f.ring().base.from_integer(e)});
  }
  return Polynomial<R>(f.ring(), std::move(out));
}

/// Substitutes polynomials (all in ring `target`) for the variables of f.
template <class R>
Polynomial<R> substitute(const Polynomial<R>& f, const std::vector<Polynomial<R>>& images,
                         const PolyRing<R>& target) {
  if (images.size() != f.nvars()) fail(ErrorKind::Dimension, "substitution needs one image per variable");
  // cache powers per variable
  std::vector<std::vector<Polynomial<R>>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<R>& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(target.one());
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Polynomial<R> out(target);
  for (const auto& t : f.terms()) {
    Polynomial<R> term = target.constant(t.c);
    for (std::size_t v = 0; v < f.nvars(); ++v)
      if (t.m[v]) term = term * power(v, t.m[v]);
    out += term;
  }
  return out;
}

/// Coefficient-level map into another coefficient ring.
template <class R, class S, class F>
Polynomial<S> map_coefficients(const Polynomial<R>& f, const PolyRing<S>& target, F fn) {
  return f.template map_coefficients<S>(target, fn);
}

}  // namespace liftings

namespace liftings {

/// f with variable `var` replaced by e (same ring).
template <class R>
Polynomial<R> substitute_variable(const Polynomial<R>& f, std::size_t var, const Polynomial<R>& e) {
  unsigned d = degree_in(f, var);
  if (d == 0) return f;
  std::vector<std::vector<Term<R>>> parts(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    unsigned k = m[var];
    m.set(var, 0);
    parts[k].push_back({std::move(m), t.c});
  }
  // Horner in e
  Polynomial<R> acc(f.ring(), std::move(parts[d]));
  for (unsigned k = d; k-- > 0;) acc = acc * e + Polynomial<R>(f.ring(), std::move(parts[k]));
  return acc;
}

/// Value of f at a point of K^n.
template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
  if (point.size() != f.nvars()) fail(ErrorKind::Argument, "evaluation point has the wrong dimension");
  K s = f.ring().base.zero();
  for (const auto& t : f.terms()) {
    K v = t.c;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
      for (unsigned e = 0; e < t.m[i]; ++e) v *= point[i];
    s += v;
  }
  return s;
}

}  // namespace liftings

#pragma once

// Ideal operations built on the Buchberger engine: syzygies, elimination,
// intersection, saturation by the last variable, truncation, membership,
// equality, and Sylvester resultants.

#include <algorithm>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/normal_form.hpp"

namespace liftings {

template <class R>
using SyzygyRow = std::vector<Polynomial<R>>;

/// Embeds f into the ring with a new variable at position `pos`.
template <class R>
Polynomial<R> insert_variable(const Polynomial<R>& f, std::size_t pos) {
  PolyRing<R> ring(f.nvars() + 1, f.ring().base);
  std::vector<Term<R>> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.m.with_new_variable(pos), t.c});
  return Polynomial<R>(ring, std::move(ts));
}

/// Removes variable `pos`, which must not occur in f.
template <class R>
Polynomial<R> remove_variable(const Polynomial<R>& f, std::size_t pos) {
  PolyRing<R> ring(f.nvars() - 1, f.ring().base);
  std::vector<Term<R>> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.m[pos]) fail(ErrorKind::Argument, "variable to remove still occurs");
    ts.push_back({t.m.without(pos), t.c});
  }
  return Polynomial<R>(ring, std::move(ts));
}

/// Checks sum(row[i] * G[i]) == 0.
template <class R>
bool is_syzygy(const SyzygyRow<R>& row, const std::vector<Polynomial<R>>& G) {
  if (row.size() != G.size() || G.empty()) return false;
  Polynomial<R> s(G.front().ring());
  for (std::size_t i = 0; i < G.size(); ++i) s += row[i] * G[i];
  return s.is_zero();
}

/// Schreyer rows of a monic Groebner basis: for every S-pair (i, j) the row
/// (lcm/Ht_i) e_i - (lcm/Ht_j) e_j minus the division cofactors. When G is a
/// monomial list and `minimalize` is set, rows dominated by a strictly smaller
/// chain through a third generator are dropped.
template <class R>
std::vector<SyzygyRow<R>> syzygies(const std::vector<Polynomial<R>>& G, const TermOrder& order,
                                   bool minimalize = true) {
  std::vector<SyzygyRow<R>> rows;
  if (G.size() < 2) return rows;
  std::vector<Monomial> heads;
  bool monomial = true;
  for (const auto& g : G) {
    heads.push_back(g.head_term(order));
    if (!g.is_monomial()) monomial = false;
  }
  const auto& ring = G.front().ring();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Monomial l = lcm(heads[i], heads[j]);
      if (monomial && minimalize) {
        bool dominated = false;
        for (std::size_t k = 0; k < G.size() && !dominated; ++k) {
          if (k == i || k == j || !heads[k].divides(l)) continue;
          if (!(lcm(heads[i], heads[k]) == l) && !(lcm(heads[j], heads[k]) == l)) dominated = true;
        }
        if (dominated) continue;
      }
      Monomial mi = heads[i].quotient_of(l), mj = heads[j].quotient_of(l);
      Polynomial<R> s = G[i].shift(mi) - G[j].shift(mj);
      auto nf = normal_form(s, G, order, true);
      if (!nf.remainder.is_zero()) fail(ErrorKind::NotAGroebnerBasis, "an S-pair does not reduce to zero");
      SyzygyRow<R> row(G.size(), ring.zero());
      row[i] = ring.monomial(ring.base.one(), mi);
      row[j] = -ring.monomial(ring.base.one(), mj);
      for (std::size_t k = 0; k < G.size(); ++k) row[k] -= nf.quotients[k];
      rows.push_back(std::move(row));
    }
  return rows;
}

/// Generators of I intersected with K[keep], through a block order that
/// eliminates the complement.
template <class K>
std::vector<Polynomial<K>> eliminate(const std::vector<Polynomial<K>>& gens, const std::vector<std::size_t>& keep,
                                     std::size_t nvars, const BuchbergerOptions& opts = {}) {
  std::vector<bool> kept(nvars, false);
  for (auto v : keep) {
    if (v >= nvars) fail(ErrorKind::Argument, "variable index out of range");
    kept[v] = true;
  }
  std::vector<std::size_t> outer;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!kept[v]) outer.push_back(v);
  if (outer.empty()) return buchberger(gens, TermOrder::degrevlex(), opts).elements;
  TermOrder ord = TermOrder::block(nvars, outer, TermOrder::degrevlex(), TermOrder::degrevlex());
  auto gb = buchberger(gens, ord, opts);
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (auto v : outer)
      if (g.involves(v)) pure = false;
    if (pure) out.push_back(g);
  }
  return out;
}

/// Reduced Groebner basis of I ∩ J w.r.t. `order`, via t*I + (1-t)*J with t
/// appended as the last variable and eliminated first.
template <class K>
GroebnerBasis<K> intersect(const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& J,
                           const TermOrder& order, const Grading& grading = {}) {
  if (I.empty() || J.empty()) fail(ErrorKind::Argument, "intersection needs nonempty generator lists");
  std::size_t n = I.front().nvars();
  for (const auto& f : I)
    if (f.nvars() != n) fail(ErrorKind::Ring, "intersection of ideals from different rings");
  for (const auto& f : J)
    if (f.nvars() != n) fail(ErrorKind::Ring, "intersection of ideals from different rings");
  PolyRing<K> ext(n + 1, I.front().ring().base);
  Polynomial<K> t = ext.variable(n);
  Polynomial<K> one_minus_t = ext.one() - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I)
    if (!f.is_zero()) gens.push_back(t * insert_variable(f, n));
  for (const auto& g : J)
    if (!g.is_zero()) gens.push_back(one_minus_t * insert_variable(g, n));
  BuchbergerOptions opts;
  opts.require_homogeneous = false;
  if (!grading.empty()) {
    opts.grading = grading;
    opts.grading.push_back(0);
  }
  TermOrder ord = TermOrder::block(n + 1, {n}, TermOrder::lex(), TermOrder::degrevlex());
  auto gb = buchberger(gens, ord, opts);
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements)
    if (!g.involves(n)) out.push_back(remove_variable(g, n));
  BuchbergerOptions fin;
  fin.grading = grading;
  fin.require_homogeneous = false;
  return buchberger(out, order, fin);
}

template <class K>
GroebnerBasis<K> intersect_all(const std::vector<std::vector<Polynomial<K>>>& ideals, const TermOrder& order,
                               const Grading& grading = {}) {
  if (ideals.empty()) fail(ErrorKind::Argument, "intersection of no ideals");
  BuchbergerOptions opts;
  opts.grading = grading;
  opts.require_homogeneous = false;
  GroebnerBasis<K> acc = buchberger(ideals.front(), order, opts);
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc.elements, ideals[k], order, grading);
  return acc;
}

/// (I : x_last^inf) for homogeneous I: Groebner basis w.r.t. Degreverse(base),
/// strip the largest power of the last variable from each element, repeat.
template <class K>
GroebnerBasis<K> saturate_xn(const std::vector<Polynomial<K>>& I, const TermOrder& base = TermOrder::degrevlex()) {
  TermOrder ord = TermOrder::degreverse(base);
  auto gb = buchberger(I, ord);
  for (;;) {
    bool changed = false;
    std::vector<Polynomial<K>> next;
    for (const auto& g : gb.elements) {
      unsigned r = xn_power_divisor(g);
      if (r) changed = true;
      next.push_back(r ? divide_by_variable_power(g, g.nvars() - 1, r) : g);
    }
    if (!changed) return gb;
    gb = buchberger(next, ord);
  }
}

/// I_{>=m} from a reduced Groebner basis: f * x^gamma with |gamma| = m - deg f.
template <class K>
std::vector<Polynomial<K>> truncate(const std::vector<Polynomial<K>>& G, int m) {
  if (m < 0) fail(ErrorKind::Argument, "truncation degree must be non-negative");
  std::vector<Polynomial<K>> out;
  for (const auto& f : G) {
    int pad = std::max(0, m - static_cast<int>(f.degree()));
    for (const auto& g : monomials_of_degree(f.nvars(), static_cast<unsigned>(pad))) out.push_back(f.shift(g));
  }
  return out;
}

template <class K>
BuchbergerOptions relaxed_options(const Grading& grading) {
  BuchbergerOptions o;
  o.grading = grading;
  o.require_homogeneous = false;
  return o;
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const std::vector<Polynomial<K>>& I, const Grading& grading = {}) {
  if (f.is_zero()) return true;
  TermOrder ord = TermOrder::degrevlex();
  auto gb = buchberger(I, ord, relaxed_options<K>(grading));
  return normal_form(f, gb.elements, ord).remainder.is_zero();
}

/// Membership against an already computed basis.
template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return f.is_zero() || normal_form(f, gb.elements, gb.order).remainder.is_zero();
}

template <class K>
bool ideal_contains(const GroebnerBasis<K>& gb, const std::vector<Polynomial<K>>& gens) {
  for (const auto& g : gens)
    if (!ideal_member(g, gb)) return false;
  return true;
}

/// Equality of ideals by mutual membership of generators.
template <class K>
bool ideal_equal(const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& J,
                 const Grading& grading = {}, const TermOrder& ord = TermOrder::degrevlex()) {
  auto gi = buchberger(I, ord, relaxed_options<K>(grading));
  auto gj = buchberger(J, ord, relaxed_options<K>(grading));
  return ideal_contains(gi, J) && ideal_contains(gj, I);
}

/// Exact division a / b over a field; fails unless b divides a.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) fail(ErrorKind::Argument, "division by the zero polynomial");
  TermOrder ord = TermOrder::deglex();
  const auto& hb = b.head(ord);
  K inv = hb.c.inverse();
  Polynomial<K> r = a;
  std::vector<Term<K>> q;
  while (!r.is_zero()) {
    const auto& hr = r.head(ord);
    if (!hb.m.divides(hr.m)) fail(ErrorKind::Argument, "inexact polynomial division");
    Monomial m = hb.m.quotient_of(hr.m);
    K c = hr.c * inv;
    r -= b.mul_term(c, m);
    q.push_back({std::move(m), std::move(c)});
  }
  return Polynomial<K>(a.ring(), std::move(q));
}

/// Determinant by fraction-free (Bareiss) elimination.
template <class K>
Polynomial<K> bareiss_determinant(std::vector<std::vector<Polynomial<K>>> M, const PolyRing<K>& ring) {
  std::size_t n = M.size();
  if (n == 0) return ring.one();
  Polynomial<K> prev = ring.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M[p][k].is_zero()) ++p;
      if (p == n) return ring.zero();
      std::swap(M[k], M[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = ring.zero();
    }
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

/// Sylvester resultant of f and g with respect to variable v.
template <class K>
Polynomial<K> resultant(const Polynomial<K>& f, const Polynomial<K>& g, std::size_t v) {
  unsigned m = degree_in(f, v), n = degree_in(g, v);
  if (m == 0 || n == 0) fail(ErrorKind::Argument, "resultant needs positive degree in the variable");
  const auto& ring = f.ring();
  std::size_t N = m + n;
  std::vector<std::vector<Polynomial<K>>> S(N, std::vector<Polynomial<K>>(N, ring.zero()));
  for (unsigned r = 0; r < n; ++r)
    for (unsigned k = 0; k <= m; ++k) S[r][r + k] = coefficient_in(f, v, m - k);
  for (unsigned r = 0; r < m; ++r)
    for (unsigned k = 0; k <= n; ++k) S[n + r][r + k] = coefficient_in(g, v, n - k);
  return bareiss_determinant(std::move(S), ring);
}

/// (-1)^(d(d-1)/2) Res(f, df/dv) / lc_v(f); b^2 - 4ac for quadratics.
template <class K>
Polynomial<K> discriminant(const Polynomial<K>& f, std::size_t v) {
  unsigned d = degree_in(f, v);
  if (d == 0) fail(ErrorKind::Argument, "discriminant needs positive degree in the variable");
  if (d == 1) return f.ring().one();
  Polynomial<K> r = resultant(f, derivative(f, v), v);
  if ((d * (d - 1) / 2) % 2) r = -r;
  return divide_exact(r, coefficient_in(f, v, d));
}

}  // namespace liftings

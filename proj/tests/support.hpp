#pragma once

// Shared fixtures: parsing helpers, the worked ideals, and small oracles that
// do not go through the Groebner engine.

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

#include "liftings/liftings.hpp"

namespace fixtures {

using namespace liftings;
using Q = Rational;
using PQ = Polynomial<Q>;

inline std::vector<std::string> xs(std::size_t n) { return default_names("x", n); }

template <class K>
Polynomial<K> poly(const std::string& s, std::size_t n, const typename K::ring_type& f) {
  return parse_polynomial(s, PolyRing<K>(n, f), xs(n));
}
inline PQ q(const std::string& s, std::size_t n) { return poly<Q>(s, n, RationalField{}); }

template <class K>
std::vector<Polynomial<K>> ideal(const std::vector<std::string>& gens, std::size_t n, const typename K::ring_type& f) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : gens) out.push_back(poly<K>(g, n, f));
  return out;
}
inline std::vector<PQ> qideal(const std::vector<std::string>& gens, std::size_t n) {
  return ideal<Q>(gens, n, RationalField{});
}

/// Parameter-ring polynomials named C1..Cm (or another prefix).
inline std::vector<PQ> params(const std::vector<std::string>& gens, const std::vector<std::string>& names) {
  PolyRing<Q> ring(names.size(), RationalField{});
  std::vector<PQ> out;
  for (const auto& g : gens) out.push_back(parse_polynomial(g, ring, names));
  return out;
}

/// H * K[x, xn]: the same generators with a new last variable.
inline std::vector<PQ> insert_variable_all(const std::vector<PQ>& I) {
  std::vector<PQ> out;
  for (const auto& f : I) out.push_back(insert_variable(f, f.nvars()));
  return out;
}

inline std::vector<Monomial> heads(const std::vector<PQ>& G, const TermOrder& o) {
  std::vector<Monomial> h;
  for (const auto& g : G) h.push_back(g.head_term(o));
  return h;
}

// the worked ideals ---------------------------------------------------------

inline std::vector<PQ> lex_segment() { return qideal({"x0^2", "x0*x1", "x0*x2", "x1^2"}, 3); }
inline std::vector<PQ> two_orders() { return qideal({"x0^2", "x0*x1", "x1^4 + x0*x2^3"}, 3); }
inline std::vector<PQ> acm_codim2() { return qideal({"x0^2 - x1^2", "x0*x1 + 2*x1^2", "x1^3"}, 3); }
inline std::vector<PQ> maximal_square() { return qideal({"x0^2", "x0*x1", "x1^2"}, 3); }
inline std::vector<PQ> nonreduced_scheme() {
  return qideal({"x0*x3^3", "x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x0^2*x2", "x0*x2^2", "x2^3 - x3^3"}, 4);
}

/// Seeded random homogeneous ideals: 2..4 variables, degree <= 4, proper.
inline std::vector<std::vector<PQ>> random_ideals(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<std::vector<PQ>> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t n = 2 + rng() % 3;
    PolyRing<Q> ring(n, RationalField{});
    std::size_t k = 1 + rng() % 3;
    std::vector<PQ> I;
    for (std::size_t i = 0; i < k; ++i) {
      unsigned d = 1 + rng() % 3;
      auto ms = monomials_of_degree(n, d);
      PQ f(ring);
      std::size_t terms = 1 + rng() % 3;
      for (std::size_t t = 0; t < terms; ++t)
        f += ring.monomial(Q(static_cast<long>(rng() % 7) - 3), ms[rng() % ms.size()]);
      if (!f.is_zero()) I.push_back(f);
    }
    if (I.empty()) continue;
    out.push_back(I);
  }
  return out;
}

// oracles -------------------------------------------------------------------

/// Rank over Q of a dense matrix, by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> A) {
  std::size_t r = 0;
  const std::size_t cols = A.empty() ? 0 : A.front().size();
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      mpq_class f = A[i][c] / A[r][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
    }
    ++r;
  }
  return r;
}

/// dim_Q of I_d from the span of all x^g * f with deg = d (Macaulay matrix).
inline std::size_t graded_dimension(const std::vector<PQ>& I, unsigned d) {
  const std::size_t n = I.front().nvars();
  auto basis = monomials_of_degree(n, d);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& f : I) {
    if (!f.is_homogeneous() || f.degree() > d) continue;
    for (const auto& g : monomials_of_degree(n, d - f.degree())) {
      std::vector<mpq_class> row(basis.size());
      PQ shifted = f.shift(g);
      for (const auto& t : shifted.terms())
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (basis[k] == t.m) row[k] = t.c.value();
      rows.push_back(std::move(row));
    }
  }
  return rank(std::move(rows));
}

/// Number of degree-d terms in the monomial ideal generated by `heads`.
inline std::size_t monomials_in(const std::vector<Monomial>& heads, std::size_t n, unsigned d) {
  std::size_t c = 0;
  for (const auto& m : monomials_of_degree(n, d))
    for (const auto& h : heads)
      if (h.divides(m)) {
        ++c;
        break;
      }
  return c;
}

/// Determinant by cofactor expansion (independent of the Bareiss code).
template <class K>
Polynomial<K> naive_det(const std::vector<std::vector<Polynomial<K>>>& M) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Polynomial<K> s(M[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial<K>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial<K> t = M[0][j] * naive_det(sub);
    if (j % 2) s -= t;
    else s += t;
  }
  return s;
}

}  // namespace fixtures

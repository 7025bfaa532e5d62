#pragma once

// Codimension-two aCM ideals: Hilbert-Burch matrices of the initial ideal and
// of H, distraction of monomial ideals, the Groebner deformation H(t), and the
// perturbed matrix M(t) = M_{H(t)} + M_N - M_j whose minors give liftings.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "liftings/core/field.hpp"
#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/ideal.hpp"
#include "liftings/groebner/normal_form.hpp"
#include "liftings/lifting/scheme.hpp"

namespace liftings {

template <class R>
using PolyMatrix = std::vector<std::vector<Polynomial<R>>>;

template <class R>
struct HilbertBurchMatrix {
  PolyMatrix<R> rows;                    // a x (a+1)
  std::vector<Polynomial<R>> generators;  // a+1, column j belongs to generator j
};

template <class T>
struct is_polynomial : std::false_type {};
template <class T>
struct is_polynomial<Polynomial<T>> : std::true_type {};

// ---------------------------------------------------------------------------
// flattening K[c][x] -> K[c, x]

/// Coefficient variables first, then the variables of f; the last variable
/// of f stays last.
template <class K>
Polynomial<K> flatten(const Polynomial<Polynomial<K>>& f) {
  const std::size_t nc = f.ring().base.nvars, nx = f.nvars();
  PolyRing<K> ring(nc + nx, f.ring().base.base);
  std::vector<Term<K>> ts;
  for (const auto& t : f.terms())
    for (const auto& s : t.c.terms()) {
      Monomial m(nc + nx);
      for (std::size_t i = 0; i < nc; ++i) m.set(i, s.m[i]);
      for (std::size_t i = 0; i < nx; ++i) m.set(nc + i, t.m[i]);
      ts.push_back({std::move(m), s.c});
    }
  return Polynomial<K>(ring, std::move(ts));
}

template <class K>
std::vector<Polynomial<K>> flatten(const std::vector<Polynomial<Polynomial<K>>>& I) {
  std::vector<Polynomial<K>> out;
  for (const auto& f : I) out.push_back(flatten(f));
  return out;
}

/// Weight 0 on the coefficient variables, 1 on the others.
inline Grading flat_grading(std::size_t ncoeff, std::size_t nvars) {
  Grading w(ncoeff, 0);
  w.resize(ncoeff + nvars, 1);
  return w;
}

/// Ideal equality over a field, or over K[c][x] through the flattened ring
/// (equality there implies equality over K(c)[x]).
template <class R>
bool ideals_equal(const std::vector<Polynomial<R>>& I, const std::vector<Polynomial<R>>& J) {
  if constexpr (is_polynomial<R>::value) {
    if (I.empty() || J.empty()) return I.empty() && J.empty();
    const auto& r = I.front().ring();
    return ideal_equal(flatten(I), flatten(J), flat_grading(r.base.nvars, r.nvars));
  } else {
    return ideal_equal(I, J);
  }
}

// ---------------------------------------------------------------------------
// generic coordinates

/// Codimension of the monomial ideal generated by `heads`: the size of a
/// smallest set of variables meeting every generator.
inline std::size_t monomial_codimension(const std::vector<Monomial>& heads, std::size_t nvars) {
  if (heads.empty()) return 0;
  std::size_t best = nvars;
  for (unsigned long mask = 0; mask < (1ul << nvars); ++mask) {
    std::size_t bits = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (bits >= best) continue;
    bool covers = true;
    for (const auto& h : heads) {
      bool hit = false;
      for (std::size_t v = 0; v < nvars && !hit; ++v)
        if ((mask >> v & 1ul) && h[v]) hit = true;
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (covers) best = bits;
  }
  return best;
}

template <class K>
struct GenericCoordinates {
  bool ok = false;
  std::vector<std::vector<K>> change;  // x_i -> sum change[i][j] x_j, identity when untouched
  std::vector<Polynomial<K>> ideal;     // H after the change
  std::vector<Polynomial<K>> basis;     // its reduced degrevlex basis
};

template <class K>
std::vector<Polynomial<K>> linear_change(const std::vector<Polynomial<K>>& H, const std::vector<std::vector<K>>& A) {
  const auto& ring = H.front().ring();
  std::vector<Polynomial<K>> images;
  for (std::size_t i = 0; i < ring.nvars; ++i) {
    Polynomial<K> im(ring);
    for (std::size_t j = 0; j < ring.nvars; ++j)
      if (!A[i][j].is_zero()) im += ring.monomial(A[i][j], Monomial::variable(ring.nvars, j));
    images.push_back(std::move(im));
  }
  std::vector<Polynomial<K>> out;
  for (const auto& f : H) out.push_back(substitute(f, images, ring));
  return out;
}

namespace detail {

template <class K>
bool invertible(std::vector<std::vector<K>> A) {
  const std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c].is_zero()) ++p;
    if (p == n) return false;
    std::swap(A[p], A[c]);
    K inv = A[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      K f = A[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
    }
  }
  return true;
}

template <class K>
bool heads_in_first_two(const std::vector<Polynomial<K>>& G) {
  for (const auto& g : G) {
    const auto& h = g.head_term(TermOrder::degrevlex());
    for (std::size_t v = 2; v < h.size(); ++v)
      if (h[v]) return false;
  }
  return true;
}

}  // namespace detail

/// Whether the degrevlex initial ideal of H is generated in K[x0, x1]. With
/// `auto_fix`, seeded random linear changes are tried until it is.
template <class K>
GenericCoordinates<K> check_generic_coordinates(const std::vector<Polynomial<K>>& H, bool auto_fix = false,
                                                unsigned seed = 1, int retries = 20) {
  if (H.empty()) fail(ErrorKind::Argument, "empty generator list");
  const auto& ring = H.front().ring();
  const std::size_t n = ring.nvars;
  GenericCoordinates<K> out;
  out.ideal = H;
  out.basis = buchberger(H, TermOrder::degrevlex()).elements;
  std::vector<Monomial> heads;
  for (const auto& g : out.basis) heads.push_back(g.head_term(TermOrder::degrevlex()));
  if (n < 2 || monomial_codimension(heads, n) != 2)
    fail(ErrorKind::Genericity, "the ideal does not have codimension two");
  out.change.assign(n, std::vector<K>(n, ring.base.zero()));
  for (std::size_t i = 0; i < n; ++i) out.change[i][i] = ring.base.one();
  out.ok = detail::heads_in_first_two(out.basis);
  if (out.ok || !auto_fix) return out;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<std::vector<K>> A(n, std::vector<K>(n, ring.base.zero()));
    for (auto& row : A)
      for (auto& a : row) a = ring.base.from_integer(dist(rng));
    if (!detail::invertible(A)) continue;
    auto changed = linear_change(H, A);
    auto gb = buchberger(changed, TermOrder::degrevlex()).elements;
    if (detail::heads_in_first_two(gb)) {
      out.ok = true;
      out.change = A;
      out.ideal = changed;
      out.basis = gb;
      return out;
    }
  }
  fail(ErrorKind::Genericity, "no linear change of coordinates put the ideal in generic position");
}

// ---------------------------------------------------------------------------
// Hilbert-Burch matrices

/// Signed maximal minors: delete column j, sign (-1)^j.
template <class R>
std::vector<Polynomial<R>> maximal_minors(const PolyMatrix<R>& M) {
  if (M.empty()) fail(ErrorKind::Argument, "empty matrix");
  const std::size_t a = M.size();
  for (const auto& row : M)
    if (row.size() != a + 1) fail(ErrorKind::Dimension, "expected an a x (a+1) matrix");
  const auto& ring = M.front().front().ring();

  // Laplace expansion along the first row of the given columns
  std::function<Polynomial<R>(std::size_t, const std::vector<std::size_t>&)> det =
      [&](std::size_t r, const std::vector<std::size_t>& cols) -> Polynomial<R> {
    if (r == a) return ring.one();
    Polynomial<R> s(ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& e = M[r][cols[k]];
      if (e.is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      Polynomial<R> term = e * det(r + 1, rest);
      if (k % 2) s -= term;
      else s += term;
    }
    return s;
  };

  std::vector<Polynomial<R>> out;
  for (std::size_t j = 0; j <= a; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c <= a; ++c)
      if (c != j) cols.push_back(c);
    Polynomial<R> m = det(0, cols);
    out.push_back(j % 2 ? -m : m);
  }
  return out;
}

/// a x (a+1) bidiagonal matrix of B = {x0^{a_i} x1^{b_i}}, a strictly
/// decreasing, b strictly increasing. Entries live in `ring`.
template <class R>
HilbertBurchMatrix<R> hilbert_burch_monomial(std::vector<Monomial> B, const PolyRing<R>& ring) {
  if (B.size() < 2) fail(ErrorKind::Minimality, "need at least two monomial generators");
  for (const auto& m : B) {
    if (m.size() != ring.nvars) fail(ErrorKind::Dimension, "monomial of the wrong length");
    for (std::size_t v = 2; v < m.size(); ++v)
      if (m[v]) fail(ErrorKind::Minimality, "generators must lie in K[x0, x1]");
  }
  std::sort(B.begin(), B.end(), [](const Monomial& p, const Monomial& q) { return p[0] > q[0]; });
  for (std::size_t i = 0; i + 1 < B.size(); ++i)
    if (!(B[i][0] > B[i + 1][0] && B[i][1] < B[i + 1][1]))
      fail(ErrorKind::Minimality, "monomial generators are not minimal");
  HilbertBurchMatrix<R> M;
  const auto one = ring.base.one();
  for (const auto& m : B) M.generators.push_back(ring.monomial(one, m));
  for (std::size_t i = 0; i + 1 < B.size(); ++i) {
    std::vector<Polynomial<R>> row(B.size(), ring.zero());
    Monomial up(ring.nvars), down(ring.nvars);
    up.set(1, B[i + 1][1] - B[i][1]);
    down.set(0, B[i][0] - B[i + 1][0]);
    row[i] = ring.monomial(one, up);
    row[i + 1] = -ring.monomial(one, down);
    M.rows.push_back(std::move(row));
  }
  return M;
}

namespace detail {

// Generators ordered by decreasing x0-exponent of the head, i.e. the column
// order of the bidiagonal matrix.
template <class R>
std::vector<Polynomial<R>> hb_order(std::vector<Polynomial<R>> G, const TermOrder& order) {
  std::stable_sort(G.begin(), G.end(), [&](const Polynomial<R>& p, const Polynomial<R>& q) {
    return p.head_term(order)[0] > q.head_term(order)[0];
  });
  return G;
}

}  // namespace detail

/// Lifts the rows of the initial ideal's matrix to syzygies of G: every row
/// r gives sum r_i G_i, whose normal form must vanish; the row becomes r minus
/// the division cofactors. `order` must make the heads of G the bidiagonal
/// generators; they are read in K[x0, x1] (extra variables allowed).
template <class R>
HilbertBurchMatrix<R> lift_hilbert_burch(const std::vector<Polynomial<R>>& G_in, const TermOrder& order,
                                         bool check_minors = true) {
  if (G_in.empty()) fail(ErrorKind::Argument, "empty basis");
  auto G = detail::hb_order(G_in, order);
  const auto& ring = G.front().ring();
  std::vector<Monomial> heads;
  for (const auto& g : G) {
    const auto& h = g.head(order);
    if (!h.c.is_one()) fail(ErrorKind::Monicity, "the basis must be monic");
    heads.push_back(h.m);
  }
  auto Mj = hilbert_burch_monomial(heads, ring);
  HilbertBurchMatrix<R> M;
  M.generators = G;
  for (const auto& row : Mj.rows) {
    Polynomial<R> s(ring);
    for (std::size_t i = 0; i < G.size(); ++i) s += row[i] * G[i];
    auto nf = normal_form(s, G, order, true);
    if (!nf.remainder.is_zero()) fail(ErrorKind::NotAGroebnerBasis, "a syzygy of the initial ideal does not lift");
    std::vector<Polynomial<R>> lifted(G.size(), ring.zero());
    for (std::size_t i = 0; i < G.size(); ++i) lifted[i] = row[i] - nf.quotients[i];
    M.rows.push_back(std::move(lifted));
  }
  if (check_minors && !ideals_equal(maximal_minors(M.rows), G))
    fail(ErrorKind::InternalConsistency, "maximal minors do not regenerate the ideal");
  return M;
}

// ---------------------------------------------------------------------------
// distraction

template <class R>
struct Distraction {
  std::vector<Polynomial<R>> N;  // in K[x, xn], same column order as M_j
  HilbertBurchMatrix<R> M_N;
};

/// Default scalars 0, 1, 2, ... for each of `nvars` variables, `count` each.
template <class K>
std::vector<std::vector<K>> default_scalars(const typename K::ring_type& field, std::size_t nvars, std::size_t count) {
  std::vector<std::vector<K>> s(nvars);
  for (auto& v : s)
    for (std::size_t k = 0; k < count; ++k) v.push_back(field.from_integer(static_cast<long long>(k)));
  return s;
}

/// Every x^d = prod x_i^{d_i} of `J` (monomials in the n variables x)
/// becomes prod_i prod_{k<d_i} (x_i - s_i[k] x_n) in K[x, xn]; scalars are
/// coefficient-ring elements and must be pairwise distinct per variable.
template <class R>
Distraction<R> distraction_lifting(const std::vector<Monomial>& J, const std::vector<std::vector<R>>& scalars,
                                   const PolyRing<R>& ring /* n+1 variables */) {
  const std::size_t n = ring.nvars - 1;
  if (scalars.size() < n) fail(ErrorKind::Argument, "one scalar sequence per variable is required");
  for (std::size_t i = 0; i < n; ++i) {
    unsigned need = 0;
    for (const auto& m : J) need = std::max(need, m[i]);
    std::size_t distinct = 0;
    for (std::size_t k = 0; k < scalars[i].size() && distinct < need; ++k) {
      bool dup = false;
      for (std::size_t l = 0; l < k; ++l)
        if (scalars[i][l] == scalars[i][k]) dup = true;
      if (dup) break;
      ++distinct;
    }
    if (distinct < need)
      fail(ErrorKind::FieldSize, "variable x" + std::to_string(i) + " needs " + std::to_string(need) +
                                     " distinct scalars, only " + std::to_string(distinct) + " available");
  }
  Distraction<R> D;
  const Polynomial<R> xn = ring.variable(n);
  for (const auto& m : J) {
    if (m.size() != n) fail(ErrorKind::Dimension, "monomial of the wrong length");
    Polynomial<R> f = ring.one();
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < m[i]; ++k) f = f * (ring.variable(i) - xn * ring.constant(scalars[i][k]));
    D.N.push_back(std::move(f));
  }
  TermOrder ord = TermOrder::degreverse(TermOrder::degrevlex());
  for (std::size_t k = 0; k < J.size(); ++k)
    if (!(D.N[k].head_term(ord) == J[k].with_new_variable(n)))
      fail(ErrorKind::InternalConsistency, "distracted generator has an unexpected head term");
  if constexpr (!is_polynomial<R>::value) {
    if (!is_groebner_basis(D.N, ord)) fail(ErrorKind::InternalConsistency, "distraction is not a Groebner basis");
  }
  D.M_N = lift_hilbert_burch(D.N, ord);
  D.N = D.M_N.generators;
  return D;
}

// ---------------------------------------------------------------------------
// Groebner deformation

/// omega over x0..x_{n-1}, optionally followed by a 0 for xn.
template <class K>
bool valid_deformation_weight(const std::vector<Polynomial<K>>& G, const Grading& omega) {
  const TermOrder ord = TermOrder::degrevlex();
  for (const auto& g : G) {
    const auto& h = g.head_term(ord);
    for (const auto& t : g.terms()) {
      if (t.m == h) continue;
      long long e = 0;
      for (std::size_t i = 0; i < h.size(); ++i)
        e += omega[i] * (static_cast<long long>(h[i]) - static_cast<long long>(t.m[i]));
      if (e <= 0) return false;
    }
  }
  return true;
}

/// Smallest-bound non-negative integer weight with omega.(alpha - gamma) > 0
/// for every head alpha and tail term gamma of G. Returns n+1 entries, the
/// last (for xn) zero.
template <class K>
Grading deformation_weight(const std::vector<Polynomial<K>>& G, long long max_bound = 12) {
  if (G.empty()) fail(ErrorKind::Argument, "empty basis");
  const std::size_t n = G.front().nvars();
  bool monomial = std::all_of(G.begin(), G.end(), [](const Polynomial<K>& g) { return g.is_monomial(); });
  if (monomial) {
    Grading w(n, 1);
    w.push_back(0);
    return w;
  }
  for (long long B = 1; B <= max_bound; ++B) {
    Grading w(n, 0);
    // odometer over [0, B]^n, keeping vectors that reach the bound
    for (;;) {
      if (*std::max_element(w.begin(), w.end()) == B && valid_deformation_weight(G, w)) {
        w.push_back(0);
        return w;
      }
      std::size_t i = 0;
      while (i < n && w[i] == B) w[i++] = 0;
      if (i == n) break;
      ++w[i];
    }
  }
  fail(ErrorKind::WeightSearch, "no weight vector with entries up to " + std::to_string(max_bound) +
                                    " makes every tail exponent positive");
}

/// f_alpha(t) = x^alpha + sum c t^{omega.(alpha-gamma)} x^gamma in K[t][x].
template <class K>
std::vector<Polynomial<Polynomial<K>>> deformation_family(const std::vector<Polynomial<K>>& G, const Grading& omega) {
  if (!valid_deformation_weight(G, omega))
    fail(ErrorKind::WeightSearch, "the weight vector leaves a non-positive tail exponent");
  const auto& ring = G.front().ring();
  PolyRing<K> tring(1, ring.base);
  PolyRing<Polynomial<K>> xring(ring.nvars, tring);
  std::vector<Polynomial<Polynomial<K>>> out;
  const TermOrder ord = TermOrder::degrevlex();
  for (const auto& g : G) {
    const auto& h = g.head_term(ord);
    std::vector<Term<Polynomial<K>>> ts;
    for (const auto& t : g.terms()) {
      long long e = 0;
      for (std::size_t i = 0; i < h.size(); ++i)
        e += omega[i] * (static_cast<long long>(h[i]) - static_cast<long long>(t.m[i]));
      Monomial te(1);
      te.set(0, static_cast<unsigned>(e));
      ts.push_back({t.m, tring.monomial(t.c, te)});
    }
    out.emplace_back(xring, std::move(ts));
  }
  return out;
}

/// Evaluates the K[t] coefficients at t = value.
template <class K>
Polynomial<K> at_t(const Polynomial<Polynomial<K>>& f, const K& value) {
  PolyRing<K> ring(f.nvars(), f.ring().base.base);
  return f.template map_coefficients<K>(ring, [&](const Polynomial<K>& c) { return evaluate(c, {value}); });
}

/// x_i -> s^{omega_i} x_i for i < n, xn fixed.
template <class K>
Polynomial<K> scale_variables(const Polynomial<K>& f, const Grading& omega, const K& s) {
  std::vector<Term<K>> ts;
  for (const auto& t : f.terms()) {
    K c = t.c;
    for (std::size_t i = 0; i < t.m.size() && i < omega.size(); ++i)
      for (long long e = 0; e < omega[i] * static_cast<long long>(t.m[i]); ++e) c *= s;
    ts.push_back({t.m, std::move(c)});
  }
  return Polynomial<K>(f.ring(), std::move(ts));
}

// ---------------------------------------------------------------------------
// the perturbed matrix and radical liftings

/// Embeds an n-variable matrix into K[x, xn] (new last variable).
template <class R>
PolyMatrix<R> add_last_variable(const PolyMatrix<R>& M) {
  PolyMatrix<R> out = M;
  for (auto& row : out)
    for (auto& e : row) e = insert_variable(e, e.nvars());
  return out;
}

template <class R>
PolyMatrix<R> perturbed_matrix(const PolyMatrix<R>& M_H, const PolyMatrix<R>& M_N, const PolyMatrix<R>& M_j) {
  if (M_H.size() != M_N.size() || M_H.size() != M_j.size()) fail(ErrorKind::Dimension, "matrix shapes differ");
  PolyMatrix<R> M = M_H;
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (M[r].size() != M_N[r].size() || M[r].size() != M_j[r].size())
      fail(ErrorKind::Dimension, "matrix shapes differ");
    for (std::size_t c = 0; c < M[r].size(); ++c) M[r][c] = M_H[r][c] + M_N[r][c] - M_j[r][c];
  }
  return M;
}

/// Lifts a constant-coefficient matrix into K[t][...].
template <class K>
PolyMatrix<Polynomial<K>> constant_in_t(const PolyMatrix<K>& M, const PolyRing<Polynomial<K>>& ring) {
  PolyMatrix<Polynomial<K>> out;
  for (const auto& row : M) {
    std::vector<Polynomial<Polynomial<K>>> r;
    for (const auto& e : row)
      r.push_back(e.template map_coefficients<Polynomial<K>>(ring, [&](const K& c) { return ring.base.constant(c); }));
    out.push_back(std::move(r));
  }
  return out;
}

template <class K>
struct Specialization {
  K t;
  std::vector<Polynomial<K>> I_t;          // minors of M(t) at t
  bool deformed_is_lifting = false;         // lifting of H(t)
  std::vector<Polynomial<K>> lifting;       // rescaled back, a lifting of H
  bool is_lifting = false;
  bool decomposition_verified = false;      // set by the caller when components are known
};

template <class K>
struct RadicalLift {
  std::vector<Polynomial<K>> G;             // reduced degrevlex basis of H, column order
  std::vector<Monomial> j;                  // its head terms
  HilbertBurchMatrix<K> M_j;
  HilbertBurchMatrix<K> M_H;
  Distraction<K> N;
  Grading omega;
  std::vector<Polynomial<Polynomial<K>>> H_t;
  PolyMatrix<Polynomial<K>> M_t;            // entries in K[t][x, xn]
  std::vector<Polynomial<Polynomial<K>>> I_t;
  std::vector<Specialization<K>> specializations;
  std::optional<std::size_t> chosen;        // first specialization that verified
  const std::vector<Polynomial<K>>& result() const { return specializations.at(*chosen).lifting; }
};

struct RadicalLiftOptions {
  Grading omega;                        // empty: search
  std::vector<long long> t_values = {7, 2, 3, 5, 11};
  bool stop_at_first = true;
};

/// Candidate radical x_n-lifting of H: M(t) = M_{H(t)} + M_N - M_j, its
/// minors I(t), specialized at the given t and rescaled by x_i -> t^{omega_i} x_i.
template <class K>
RadicalLift<K> radical_lift(const std::vector<Polynomial<K>>& H, const std::vector<std::vector<K>>& scalars,
                            const RadicalLiftOptions& opts = {}) {
  auto gc = check_generic_coordinates(H);
  if (!gc.ok) fail(ErrorKind::Genericity, "the initial ideal is not generated in K[x0, x1]");
  const TermOrder ord = TermOrder::degrevlex();
  const auto& xring = H.front().ring();
  const auto& field = xring.base;
  const std::size_t n = xring.nvars;

  RadicalLift<K> out;
  out.M_H = lift_hilbert_burch(gc.basis, ord);
  out.G = out.M_H.generators;
  for (const auto& g : out.G) out.j.push_back(g.head_term(ord));
  out.M_j = hilbert_burch_monomial(out.j, xring);

  PolyRing<K> ext(n + 1, field);
  out.N = distraction_lifting(out.j, scalars, ext);

  out.omega = opts.omega.empty() ? deformation_weight(out.G) : opts.omega;
  if (out.omega.size() == n) out.omega.push_back(0);
  if (out.omega.size() != n + 1 || out.omega[n] != 0)
    fail(ErrorKind::Argument, "the weight vector needs one entry per variable and 0 for the last one");

  out.H_t = deformation_family(out.G, out.omega);
  auto M_Ht = lift_hilbert_burch(out.H_t, ord, false);
  if (!(M_Ht.generators == out.H_t)) fail(ErrorKind::InternalConsistency, "deformed basis changed column order");
  PolyRing<K> tring(1, field);
  PolyRing<Polynomial<K>> txring(n + 1, tring);
  out.M_t = perturbed_matrix(add_last_variable(M_Ht.rows), constant_in_t(out.N.M_N.rows, txring),
                             constant_in_t(add_last_variable(out.M_j.rows), txring));
  out.I_t = maximal_minors(out.M_t);

  for (long long tv : opts.t_values) {
    K t = field.from_integer(tv);
    if (t.is_zero()) continue;
    Specialization<K> s;
    s.t = t;
    for (const auto& f : out.I_t) s.I_t.push_back(at_t(f, t));
    std::vector<Polynomial<K>> Ht;
    for (const auto& f : out.H_t) Ht.push_back(at_t(f, t));
    s.deformed_is_lifting = is_lifting(s.I_t, Ht, ord).is_lifting;
    if (s.deformed_is_lifting) {
      for (const auto& f : s.I_t) s.lifting.push_back(scale_variables(f, out.omega, t));
      s.lifting = buchberger(s.lifting, TermOrder::degreverse(ord)).elements;
      s.is_lifting = is_lifting(s.lifting, out.G, ord).is_lifting;
    }
    out.specializations.push_back(std::move(s));
    if (out.specializations.back().is_lifting) {
      if (!out.chosen) out.chosen = out.specializations.size() - 1;
      if (opts.stop_at_first) break;
    }
  }
  if (!out.chosen) fail(ErrorKind::SpecializationFailure, "no supplied value of t produced a lifting");
  return out;
}

/// The undeformed construction with coefficients in a ring R that extends K
/// (e.g. K[chi] when the distraction needs a symbolic scalar): M = M_H + M_N - M_j.
template <class K, class R>
struct ParametricLift {
  HilbertBurchMatrix<R> M_j, M_H;
  Distraction<R> N;
  PolyMatrix<R> M;
  std::vector<Polynomial<R>> I;
};

template <class K, class R>
ParametricLift<K, R> parametric_lift(const std::vector<Polynomial<K>>& H, const std::vector<std::vector<R>>& scalars,
                                    const PolyRing<R>& xring /* variables of H */) {
  auto gc = check_generic_coordinates(H);
  if (!gc.ok) fail(ErrorKind::Genericity, "the initial ideal is not generated in K[x0, x1]");
  const TermOrder ord = TermOrder::degrevlex();
  std::vector<Polynomial<R>> G;
  for (const auto& g : gc.basis)
    G.push_back(g.template map_coefficients<R>(xring, [&](const K& c) { return xring.base.constant(c); }));
  ParametricLift<K, R> out;
  out.M_H = lift_hilbert_burch(G, ord);
  std::vector<Monomial> j;
  for (const auto& g : out.M_H.generators) j.push_back(g.head_term(ord));
  out.M_j = hilbert_burch_monomial(j, xring);
  PolyRing<R> ext(xring.nvars + 1, xring.base);
  out.N = distraction_lifting(j, scalars, ext);
  out.M = perturbed_matrix(add_last_variable(out.M_H.rows), out.N.M_N.rows, add_last_variable(out.M_j.rows));
  out.I = maximal_minors(out.M);
  return out;
}

/// Lifting test from the definition, usable in a flattened ring whose last
/// variable is xn: I + (xn) = H + (xn) and (I : xn) = I, homogeneous for `grading`.
template <class K>
bool lifting_by_definition(const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& H_ext,
                           const Grading& grading = {}) {
  if (I.empty() || H_ext.empty()) fail(ErrorKind::Argument, "empty generator list");
  const auto& ring = I.front().ring();
  const std::size_t xn = ring.nvars - 1;
  std::vector<Polynomial<K>> a = I, b = H_ext;
  a.push_back(ring.variable(xn));
  b.push_back(ring.variable(xn));
  if (!ideal_equal(a, b, grading)) return false;
  auto cap = intersect(I, {ring.variable(xn)}, TermOrder::degrevlex(), grading);
  std::vector<Polynomial<K>> colon;
  for (const auto& g : cap.elements) colon.push_back(divide_by_variable_power(g, xn, 1));
  return ideal_equal(colon, I, grading);
}

/// I equals the intersection of the components; each component must be proper.
template <class K>
bool verify_radical_against_decomposition(const std::vector<Polynomial<K>>& I,
                                          const std::vector<std::vector<Polynomial<K>>>& components,
                                          const Grading& grading = {}) {
  if (components.empty()) return false;
  for (const auto& c : components) {
    if (c.empty()) return false;
    for (const auto& g : c)
      if (!g.is_zero() && g.is_constant()) return false;
  }
  auto cap = intersect_all(components, TermOrder::degrevlex(), grading);
  return ideal_equal(I, cap.elements, grading);
}

}  // namespace liftings

#pragma once

// Parametric families: the lifting template (fresh parameters on every
// x_n-multiple tail term of the sous-escalier) and the Groebner-stratum
// template (parameters on every sous-escalier term below the head).

#include <algorithm>
#include <string>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/core/text.hpp"
#include "liftings/error.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/ideal.hpp"

namespace liftings {

/// Elements of K[C] and of K[C][x, xn].
template <class K>
using ParamPoly = Polynomial<K>;
template <class K>
using FamilyPoly = Polynomial<Polynomial<K>>;

struct ParamDescriptor {
  std::size_t alpha_index = 0;  // 0-based position of the generator
  std::size_t gamma_index = 0;  // 0-based position inside its tail
  Monomial alpha;               // head term x^alpha
  Monomial term;                // the tail term carrying the parameter
  std::string name;             // flat name, e.g. C7
  std::string label;            // C_{i,j}, 1-based
  long long weight = 1;         // omega-weight
};

/// Terms of degree d outside the monomial ideal generated by `J`, in
/// decreasing `order`.
inline std::vector<Monomial> sous_escalier(const std::vector<Monomial>& J, std::size_t nvars, unsigned d,
                                           const TermOrder& order) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool in = false;
    for (const auto& g : J)
      if (g.divides(m)) {
        in = true;
        break;
      }
    if (!in) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

enum class TemplateKind { Lifting, Stratum };

template <class K>
struct ParametricTemplate {
  TemplateKind kind = TemplateKind::Lifting;
  std::size_t nvars = 0;          // variables of the family ring (x and xn)
  TermOrder order;                // order used for reductions (the degreverse one for liftings)
  TermOrder base_order;           // order on K[x] the H basis is reduced for
  std::vector<Polynomial<K>> H_basis;  // reduced basis of H (lifting only), ring K[x]
  std::vector<Monomial> J_basis;       // head terms, in the family ring
  std::vector<ParamDescriptor> params;
  PolyRing<K> param_ring;
  PolyRing<Polynomial<K>> ring;
  std::vector<FamilyPoly<K>> generators;
  std::vector<std::size_t> tail_start;  // first parameter index of each generator

  std::vector<std::string> param_names() const {
    std::vector<std::string> v;
    for (const auto& p : params) v.push_back(p.name);
    return v;
  }
  Grading omega() const {
    Grading w;
    for (const auto& p : params) w.push_back(p.weight);
    return w;
  }
  std::size_t parameter_count() const { return params.size(); }
};

struct TemplateOptions {
  std::string prefix = "C";
  /// Order used to number the tail terms (largest first). The default numbers
  /// by increasing power of the last variable and degrevlex on the rest.
  TermOrder enumeration = TermOrder::degreverse(TermOrder::degrevlex());
};

namespace detail {

// Generator order: by degree, then decreasing head within a degree.
template <class K>
void sort_for_enumeration(std::vector<Polynomial<K>>& G, const TermOrder& order) {
  std::stable_sort(G.begin(), G.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    const Monomial &ha = a.head_term(order), &hb = b.head_term(order);
    if (ha.degree() != hb.degree()) return ha.degree() < hb.degree();
    return order.greater(ha, hb);
  });
}

template <class K>
void finish_template(ParametricTemplate<K>& T, const std::vector<std::vector<Monomial>>& tails,
                     const std::vector<Polynomial<K>>& heads_part, const K& one, const TemplateOptions& opts,
                     const typename K::ring_type& field) {
  std::size_t count = 0;
  for (const auto& t : tails) count += t.size();
  T.param_ring = PolyRing<K>(count, field);
  T.ring = PolyRing<Polynomial<K>>(T.nvars, T.param_ring);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < tails.size(); ++a) {
    T.tail_start.push_back(idx);
    std::vector<Term<Polynomial<K>>> terms;
    for (const auto& t : heads_part[a].terms()) terms.push_back({t.m, T.param_ring.constant(t.c)});
    for (std::size_t g = 0; g < tails[a].size(); ++g, ++idx) {
      ParamDescriptor d;
      d.alpha_index = a;
      d.gamma_index = g;
      d.alpha = T.J_basis[a];
      d.term = tails[a][g];
      d.name = opts.prefix + std::to_string(idx + 1);
      d.label = opts.prefix + "_{" + std::to_string(a + 1) + "," + std::to_string(g + 1) + "}";
      d.weight = T.kind == TemplateKind::Lifting ? static_cast<long long>(d.term[T.nvars - 1]) : 1;
      T.params.push_back(d);
      terms.push_back({tails[a][g], T.param_ring.monomial(one, Monomial::variable(count, idx))});
    }
    T.generators.emplace_back(T.ring, std::move(terms));
  }
}

}  // namespace detail

/// Template {f_alpha + g_alpha} for x_n-liftings of H in K[x] (x_n is the new
/// last variable). g_alpha carries one parameter per x_n-multiple of degree
/// |alpha| outside J = in(H).
template <class K>
ParametricTemplate<K> build_template(const std::vector<Polynomial<K>>& H, const TermOrder& order,
                                     const TemplateOptions& opts = {}) {
  if (H.empty()) fail(ErrorKind::Argument, "the ideal H has no generators");
  auto gb = buchberger(H, order);
  if (gb.elements.empty()) fail(ErrorKind::Argument, "the ideal H is zero");
  for (const auto& g : gb.elements)
    if (g.degree() == 0) fail(ErrorKind::Argument, "H is the unit ideal");
  std::vector<Polynomial<K>> G = gb.elements;
  detail::sort_for_enumeration(G, order);

  const std::size_t n = G.front().nvars();
  ParametricTemplate<K> T;
  T.kind = TemplateKind::Lifting;
  T.nvars = n + 1;
  T.base_order = order;
  T.order = TermOrder::degreverse(order);
  T.H_basis = G;
  std::vector<Polynomial<K>> lifted;
  for (const auto& g : G) {
    lifted.push_back(insert_variable(g, n));
    T.J_basis.push_back(lifted.back().head_term(T.order));
  }
  std::vector<std::vector<Monomial>> tails;
  for (const auto& a : T.J_basis) {
    std::vector<Monomial> tail;
    for (const auto& m : sous_escalier(T.J_basis, n + 1, a.degree(), opts.enumeration))
      if (m[n] > 0) tail.push_back(m);
    tails.push_back(std::move(tail));
  }
  const auto field = G.front().ring().base;
  detail::finish_template(T, tails, lifted, field.one(), opts, field);
  return T;
}

/// Stratum template for the monomial ideal J (given by its minimal
/// generators): F_alpha = x^alpha + sum C x^gamma over sous-escalier terms of
/// degree |alpha| that are sigma-smaller than x^alpha.
template <class K>
ParametricTemplate<K> build_stratum_template(const std::vector<Monomial>& J, std::size_t nvars, const TermOrder& sigma,
                                             const typename K::ring_type& field, const TemplateOptions& opts = {}) {
  if (J.empty()) fail(ErrorKind::Argument, "the monomial ideal has no generators");
  ParametricTemplate<K> T;
  T.kind = TemplateKind::Stratum;
  T.nvars = nvars;
  T.order = sigma;
  T.base_order = sigma;
  std::vector<Monomial> heads = J;
  std::stable_sort(heads.begin(), heads.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return sigma.greater(a, b);
  });
  T.J_basis = heads;
  PolyRing<K> xr(nvars, field);
  std::vector<Polynomial<K>> monos;
  std::vector<std::vector<Monomial>> tails;
  for (const auto& a : heads) {
    if (a.size() != nvars) fail(ErrorKind::Dimension, "monomial generator of the wrong length");
    monos.push_back(xr.monomial(field.one(), a));
    std::vector<Monomial> tail;
    for (const auto& m : sous_escalier(heads, nvars, a.degree(), opts.enumeration))
      if (sigma.less(m, a)) tail.push_back(m);
    tails.push_back(std::move(tail));
  }
  detail::finish_template(T, tails, monos, field.one(), opts, field);
  return T;
}

}  // namespace liftings

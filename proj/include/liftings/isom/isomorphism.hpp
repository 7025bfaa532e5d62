#pragma once

// Explicit isomorphism between the presentations of the scheme of liftings
// obtained from two term orders.

#include <string>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/ideal.hpp"
#include "liftings/groebner/normal_form.hpp"
#include "liftings/lifting/scheme.hpp"
#include "liftings/lifting/template.hpp"

namespace liftings {

/// Cofactors of f = sum h_i G_i from the division algorithm.
template <class K>
std::vector<Polynomial<K>> express_in_basis(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                                            const TermOrder& order) {
  auto nf = normal_form(f, G, order, true);
  if (!nf.remainder.is_zero()) fail(ErrorKind::Membership, "polynomial is not in the ideal of the basis");
  return nf.quotients;
}

/// Images of the source parameters in the target parameter ring.
template <class K>
struct ParamMorphism {
  std::vector<ParamDescriptor> source;
  std::vector<std::string> target_names;
  std::vector<ParamPoly<K>> images;

  ParamPoly<K> apply(const ParamPoly<K>& f, const PolyRing<K>& target) const { return substitute(f, images, target); }
};

template <class K>
struct OrderPresentation {
  ParametricTemplate<K> T;
  LiftingSchemeResult<K> scheme;
};

template <class K>
OrderPresentation<K> presentation(const std::vector<Polynomial<K>>& H, const TermOrder& order,
                                  const TemplateOptions& topts, const H0Options& hopts = {}) {
  OrderPresentation<K> p{build_template(H, order, topts), {}};
  p.scheme = lifting_scheme(p.T, hopts);
  return p;
}

namespace detail {

template <class K>
CoefficientReducer<Polynomial<K>> modulo(const LiftingSchemeResult<K>& s) {
  const auto* gb = &s.reduced_gb;
  const auto* ord = &s.param_order;
  return [gb, ord](const ParamPoly<K>& c) { return normal_form(c, *gb, *ord).remainder; };
}

}  // namespace detail

/// phi: parameters of `src` -> K[C] of `dst`. Expresses the basis of `src`
/// in the basis of `dst`, lifts the relations to the family of `dst`,
/// checks that {p'} together with the basis of h0 is already a Groebner
/// basis, interreduces, and reads off the tail coefficients.
template <class K>
ParamMorphism<K> morphism_between(const OrderPresentation<K>& dst, const OrderPresentation<K>& src) {
  const auto& T = dst.T;
  const auto& Tp = src.T;
  const std::size_t n = T.nvars - 1;
  auto reducer = detail::modulo(dst.scheme);

  auto lift = [&](const Polynomial<K>& h) {
    return insert_variable(h, n).template map_coefficients<Polynomial<K>>(
        T.ring, [&](const K& c) { return T.param_ring.constant(c); });
  };

  std::vector<FamilyPoly<K>> p;
  for (const auto& fb : Tp.H_basis) {
    auto h = express_in_basis(fb, T.H_basis, T.base_order);
    FamilyPoly<K> acc(T.ring);
    for (std::size_t a = 0; a < h.size(); ++a)
      if (!h[a].is_zero()) acc += lift(h[a]) * T.generators[a];
    acc = acc.template map_coefficients<Polynomial<K>>(T.ring, reducer);
    p.push_back(std::move(acc));
  }

  const TermOrder& ord = Tp.order;
  for (std::size_t b = 0; b < p.size(); ++b)
    if (!(p[b].head_term(ord) == Tp.J_basis[b]) || !p[b].head_coefficient(ord).is_one())
      fail(ErrorKind::InternalConsistency, "lifted relation has an unexpected head term");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (coprime(Tp.J_basis[i], Tp.J_basis[j])) continue;
      auto r = normal_form(s_polynomial(p[i], p[j], ord), p, ord, false, &reducer).remainder;
      if (!r.is_zero())
        fail(ErrorKind::InternalConsistency, "the lifted relations do not form a Groebner basis modulo h0");
    }

  // interreduce, ascending heads
  std::vector<std::size_t> idx(p.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ord.less(Tp.J_basis[a], Tp.J_basis[b]); });
  std::vector<FamilyPoly<K>> q = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto b : idx) {
      std::vector<FamilyPoly<K>> others;
      for (std::size_t k = 0; k < q.size(); ++k)
        if (k != b) others.push_back(q[k]);
      FamilyPoly<K> head = T.ring.monomial(T.param_ring.one(), Tp.J_basis[b]);
      FamilyPoly<K> r = head + normal_form(q[b] - head, others, ord, false, &reducer).remainder;
      if (!(r == q[b])) {
        q[b] = std::move(r);
        changed = true;
      }
    }
  }

  for (std::size_t b = 0; b < q.size(); ++b) {
    FamilyPoly<K> tail = q[b] - lift(Tp.H_basis[b]);
    for (const auto& t : tail.terms()) {
      bool ok = t.m[n] > 0;
      for (const auto& j : Tp.J_basis)
        if (j.divides(t.m)) ok = false;
      if (!ok) fail(ErrorKind::InternalConsistency, "interreduced relation has a term outside x_n N(J')");
    }
  }

  ParamMorphism<K> phi;
  phi.source = Tp.params;
  phi.target_names = T.param_names();
  for (const auto& d : Tp.params) phi.images.push_back(reducer(q[d.alpha_index].coefficient(d.term)));
  return phi;
}

template <class K>
struct Isomorphism {
  OrderPresentation<K> first;   // parameters C
  OrderPresentation<K> second;  // parameters D
  ParamMorphism<K> phi;         // K[D] -> K[C]
  ParamMorphism<K> psi;         // K[C] -> K[D]
};

template <class K>
Isomorphism<K> build_isomorphism(const std::vector<Polynomial<K>>& H, const TermOrder& order1,
                                 const TermOrder& order2, const std::string& prefix1 = "C",
                                 const std::string& prefix2 = "D", const H0Options& hopts = {}) {
  TemplateOptions t1, t2;
  t1.prefix = prefix1;
  t2.prefix = prefix2;
  Isomorphism<K> iso{presentation(H, order1, t1, hopts), presentation(H, order2, t2, hopts), {}, {}};
  iso.phi = morphism_between(iso.first, iso.second);
  iso.psi = morphism_between(iso.second, iso.first);
  return iso;
}

struct IsomorphismReport {
  bool phi_maps_ideal = false;     // phi(h0') in (H)
  bool psi_maps_ideal = false;     // psi(h0) in (H')
  bool round_trips = false;        // C - phi(psi(C)) in (H), D - psi(phi(D)) in (H')
  bool weights_preserved = false;  // images are homogeneous of the source weight
  bool ok() const { return phi_maps_ideal && psi_maps_ideal && round_trips && weights_preserved; }
};

template <class K>
IsomorphismReport verify_isomorphism(const Isomorphism<K>& iso, bool throw_on_failure = true) {
  const auto& A = iso.first;
  const auto& B = iso.second;
  auto inA = [&](const ParamPoly<K>& f) { return normal_form(f, A.scheme.reduced_gb, A.scheme.param_order).remainder.is_zero(); };
  auto inB = [&](const ParamPoly<K>& f) { return normal_form(f, B.scheme.reduced_gb, B.scheme.param_order).remainder.is_zero(); };
  IsomorphismReport rep;
  rep.phi_maps_ideal = true;
  for (const auto& g : B.scheme.h0_generators)
    if (!inA(iso.phi.apply(g, A.T.param_ring))) rep.phi_maps_ideal = false;
  rep.psi_maps_ideal = true;
  for (const auto& g : A.scheme.h0_generators)
    if (!inB(iso.psi.apply(g, B.T.param_ring))) rep.psi_maps_ideal = false;
  rep.round_trips = true;
  for (std::size_t k = 0; k < A.T.param_ring.nvars; ++k) {
    ParamPoly<K> back = iso.phi.apply(iso.psi.images[k], A.T.param_ring);
    if (!inA(A.T.param_ring.variable(k) - back)) rep.round_trips = false;
  }
  for (std::size_t k = 0; k < B.T.param_ring.nvars; ++k) {
    ParamPoly<K> back = iso.psi.apply(iso.phi.images[k], B.T.param_ring);
    if (!inB(B.T.param_ring.variable(k) - back)) rep.round_trips = false;
  }
  rep.weights_preserved = true;
  auto wa = A.T.omega(), wb = B.T.omega();
  for (std::size_t k = 0; k < iso.phi.images.size(); ++k) {
    const auto& im = iso.phi.images[k];
    if (!im.is_homogeneous(wa) || (!im.is_zero() && graded_degree(im, wa) != wb[k])) rep.weights_preserved = false;
  }
  for (std::size_t k = 0; k < iso.psi.images.size(); ++k) {
    const auto& im = iso.psi.images[k];
    if (!im.is_homogeneous(wb) || (!im.is_zero() && graded_degree(im, wb) != wa[k])) rep.weights_preserved = false;
  }
  if (throw_on_failure && !rep.ok()) fail(ErrorKind::TheoremViolation, "isomorphism verification failed");
  return rep;
}

}  // namespace liftings

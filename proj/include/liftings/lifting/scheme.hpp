#pragma once

// The defining ideal of the scheme of liftings, its linear elimination, the
// lifting predicate, and the torus action on parameter points.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/ideal.hpp"
#include "liftings/groebner/normal_form.hpp"
#include "liftings/lifting/template.hpp"

namespace liftings {

struct H0Options {
  /// Offer the divisors in reverse list order (a different reduction strategy).
  bool reverse_divisors = false;
  std::size_t threads = 1;
};

/// Coefficients (in K[C]) of the complete reductions of all pairwise
/// S-polynomials of the template, syntactically de-duplicated, in pair order.
template <class K>
std::vector<ParamPoly<K>> compute_h0(const ParametricTemplate<K>& T, const H0Options& opts = {}) {
  std::vector<FamilyPoly<K>> divisors = T.generators;
  if (opts.reverse_divisors) std::reverse(divisors.begin(), divisors.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < T.generators.size(); ++a)
    for (std::size_t b = a + 1; b < T.generators.size(); ++b) pairs.emplace_back(a, b);

  std::vector<std::vector<ParamPoly<K>>> found(pairs.size());
  auto work = [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    auto s = s_polynomial(T.generators[a], T.generators[b], T.order);
    auto r = normal_form(s, divisors, T.order).remainder;
    for (const auto& t : r.terms()) found[k].push_back(t.c);
  };
  std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, pairs.size()));
  if (threads == 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mutex;
    for (std::size_t i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        try {
          for (std::size_t k = next++; k < pairs.size(); k = next++) work(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  std::vector<ParamPoly<K>> out;
  for (auto& v : found)
    for (auto& c : v)
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  return out;
}

/// The Groebner stratum ideal of J w.r.t. sigma: same pipeline on the stratum template.
template <class K>
std::vector<ParamPoly<K>> compute_stratum_ideal(const ParametricTemplate<K>& S, const H0Options& opts = {}) {
  if (S.kind != TemplateKind::Stratum) fail(ErrorKind::Argument, "expected a stratum template");
  return compute_h0(S, opts);
}

/// Lex on the parameters ranked by decreasing weight, lower index first on ties.
inline TermOrder parameter_order(const Grading& omega) { return TermOrder::weighted_lex(omega); }

template <class K>
struct LiftingSchemeResult {
  std::vector<ParamPoly<K>> h0_generators;
  TermOrder param_order;
  std::vector<ParamPoly<K>> reduced_gb;   // reduced basis of h0
  std::vector<ParamPoly<K>> residual_gb;  // reduced basis in the free parameters
  std::vector<std::pair<std::size_t, ParamPoly<K>>> eliminated;  // parameter index -> image
  std::vector<std::size_t> free_params;
  bool is_affine_space = false;
  std::vector<FamilyPoly<K>> specialized_family;

  /// Image of every parameter under the elimination (free ones map to themselves).
  std::vector<ParamPoly<K>> substitution(const PolyRing<K>& ring) const {
    std::vector<ParamPoly<K>> s;
    for (std::size_t i = 0; i < ring.nvars; ++i) s.push_back(ring.variable(i));
    for (const auto& [k, e] : eliminated) s[k] = e;
    return s;
  }
};

namespace detail {

template <class K>
struct LinearEliminator {
  const TermOrder& order;
  std::vector<std::pair<std::size_t, ParamPoly<K>>> subs;
  std::vector<bool> gone;

  ParamPoly<K> apply(ParamPoly<K> f) const {
    for (const auto& [k, e] : subs)
      if (f.involves(k)) f = substitute_variable(f, k, e);
    return f;
  }

  // If f's head is a lone parameter of degree one, record the substitution.
  bool absorb(const ParamPoly<K>& f) {
    const auto& h = f.head(order);
    if (h.m.degree() != 1) return false;
    std::size_t k = 0;
    while (!h.m[k]) ++k;
    ParamPoly<K> rest = f - f.ring().monomial(h.c, h.m);
    if (rest.involves(k)) return false;
    ParamPoly<K> e = (-rest).scale(h.c.inverse());
    for (auto& [j, ej] : subs)
      if (ej.involves(k)) ej = substitute_variable(ej, k, e);
    subs.emplace_back(k, std::move(e));
    gone[k] = true;
    return true;
  }
};

}  // namespace detail

/// Reduced basis of h0 for the weighted lex order of `omega`; every element
/// whose head is a single parameter becomes a substitution, iterated to
/// closure. What remains lives in the free parameters.
template <class K>
LiftingSchemeResult<K> eliminate_linear(const std::vector<ParamPoly<K>>& h0, const Grading& omega,
                                        const PolyRing<K>& param_ring) {
  if (omega.size() != param_ring.nvars) fail(ErrorKind::Dimension, "one weight per parameter is required");
  for (const auto& g : h0)
    if (!g.is_homogeneous(omega)) fail(ErrorKind::Grading, "h0 generator is not homogeneous for the parameter weights");

  LiftingSchemeResult<K> res;
  res.h0_generators = h0;
  res.param_order = parameter_order(omega);
  detail::LinearEliminator<K> el{res.param_order, {}, std::vector<bool>(param_ring.nvars, false)};

  std::vector<ParamPoly<K>> pending;
  for (const auto& g : h0)
    if (!g.is_zero()) pending.push_back(g);

  BuchbergerOptions bopts;
  bopts.grading = omega;
  std::vector<ParamPoly<K>> residual;
  for (;;) {
    // cheap pass: generators that already expose a linear head
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<ParamPoly<K>> next;
      for (auto& g : pending) {
        ParamPoly<K> f = make_monic(el.apply(g), res.param_order);
        if (f.is_zero()) continue;
        if (el.absorb(f)) {
          progress = true;
          continue;
        }
        next.push_back(std::move(f));
      }
      pending = std::move(next);
    }
    for (auto& g : pending) g = el.apply(g);
    auto gb = buchberger(pending, res.param_order, bopts);
    bool found = false;
    std::vector<ParamPoly<K>> rest;
    for (const auto& g : gb.elements) {
      if (!found && el.absorb(g)) {
        found = true;
        continue;
      }
      rest.push_back(g);
    }
    if (!found) {
      residual = gb.elements;
      break;
    }
    pending = std::move(rest);
  }

  res.residual_gb = residual;
  for (auto& [k, e] : el.subs) e = normal_form(e, residual, res.param_order).remainder;
  std::sort(el.subs.begin(), el.subs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  res.eliminated = el.subs;
  for (std::size_t k = 0; k < param_ring.nvars; ++k)
    if (!el.gone[k]) res.free_params.push_back(k);
  res.is_affine_space = residual.empty();

  std::vector<ParamPoly<K>> gb = residual;
  for (const auto& [k, e] : res.eliminated) gb.push_back(param_ring.variable(k) - e);
  std::sort(gb.begin(), gb.end(), [&](const ParamPoly<K>& a, const ParamPoly<K>& b) {
    return res.param_order.less(a.head_term(res.param_order), b.head_term(res.param_order));
  });
  res.reduced_gb = std::move(gb);
  return res;
}

/// Applies a parameter substitution to the coefficients of a family.
template <class K>
FamilyPoly<K> substitute_parameters(const FamilyPoly<K>& f, const std::vector<ParamPoly<K>>& images,
                                    const PolyRing<Polynomial<K>>& target) {
  return f.template map_coefficients<Polynomial<K>>(
      target, [&](const ParamPoly<K>& c) { return substitute(c, images, target.base); });
}

template <class K>
struct SchemeOptions {
  H0Options h0;
};

/// Template, h0 and its linear elimination in one go.
template <class K>
LiftingSchemeResult<K> lifting_scheme(const ParametricTemplate<K>& T, const H0Options& opts = {}) {
  auto h0 = compute_h0(T, opts);
  auto res = eliminate_linear(h0, T.omega(), T.param_ring);
  auto images = res.substitution(T.param_ring);
  for (const auto& g : T.generators) res.specialized_family.push_back(substitute_parameters(g, images, T.ring));
  return res;
}

template <class K>
struct LiftingCertificate {
  bool is_lifting = false;
  std::vector<Polynomial<K>> basis;  // reduced basis of I for the degreverse order
  std::vector<Polynomial<K>> tails;  // g_alpha, when the shape matches
  std::string reason;
};

/// The reduced basis of I w.r.t. the degreverse extension of `order` has the
/// shape {f_alpha + g_alpha}, {f_alpha} the reduced basis of H and g_alpha in (x_n).
template <class K>
LiftingCertificate<K> is_lifting(const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& H,
                                 const TermOrder& order) {
  LiftingCertificate<K> cert;
  if (I.empty() || H.empty()) fail(ErrorKind::Argument, "empty generator list");
  std::size_t n = H.front().nvars();
  if (I.front().nvars() != n + 1) fail(ErrorKind::Ring, "I must live in one more variable than H");
  auto G = buchberger(H, order).elements;
  auto GI = buchberger(I, TermOrder::degreverse(order)).elements;
  cert.basis = GI;
  if (G.size() != GI.size()) {
    cert.reason = "number of basis elements differs";
    return cert;
  }
  for (std::size_t k = 0; k < G.size(); ++k) {
    Polynomial<K> g = GI[k] - insert_variable(G[k], n);
    for (const auto& t : g.terms())
      if (t.m[n] == 0) {
        cert.reason = "basis element " + std::to_string(k + 1) + " does not reduce to the basis of H modulo x_n";
        cert.tails.clear();
        return cert;
      }
    cert.tails.push_back(std::move(g));
  }
  cert.is_lifting = true;
  return cert;
}

/// c -> c * t^weight.
template <class K>
std::vector<K> torus_scale(const std::vector<K>& point, const Grading& weights, const K& t) {
  if (point.size() != weights.size()) fail(ErrorKind::Dimension, "one weight per coordinate is required");
  std::vector<K> out = point;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (long long e = 0; e < weights[i]; ++e) out[i] *= t;
  return out;
}

template <class K>
std::vector<Polynomial<K>> specialize_family(const std::vector<FamilyPoly<K>>& family, const std::vector<K>& point,
                                             const PolyRing<K>& target) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : family) {
    if (!family.empty() && point.size() != g.ring().base.nvars)
      fail(ErrorKind::Argument, "the point must assign every parameter");
    out.push_back(g.template map_coefficients<K>(target, [&](const ParamPoly<K>& c) { return evaluate(c, point); }));
  }
  return out;
}

/// The ideal of K[x, xn] obtained by replacing the parameters by constants.
template <class K>
std::vector<Polynomial<K>> specialize(const ParametricTemplate<K>& T, const std::vector<K>& point) {
  return specialize_family(T.generators, point, PolyRing<K>(T.nvars, T.param_ring.base));
}

/// A point of V(h0): free parameters outside the residual ideal get random
/// small integers, those occurring in it are set to zero (the residual basis
/// is weighted homogeneous of positive weight), eliminated ones follow.
template <class K, class Rng>
std::vector<K> sample_zero(const LiftingSchemeResult<K>& res, const PolyRing<K>& ring, Rng& rng, int bound = 3) {
  std::vector<bool> in_residual(ring.nvars, false);
  for (const auto& g : res.residual_gb)
    for (std::size_t v = 0; v < ring.nvars; ++v)
      if (g.involves(v)) in_residual[v] = true;
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<K> point(ring.nvars, ring.base.zero());
  for (auto k : res.free_params)
    if (!in_residual[k]) point[k] = ring.base.from_integer(dist(rng));
  for (const auto& [k, e] : res.eliminated) point[k] = evaluate(e, point);
  return point;
}

}  // namespace liftings

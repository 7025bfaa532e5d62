#pragma once

#include <functional>
#include <map>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/error.hpp"

namespace liftings {

template <class R>
struct NormalFormResult {
  Polynomial<R> remainder;
  std::vector<Polynomial<R>> quotients;  // empty unless requested
};

/// Optional hook applied to every coefficient before it is inspected; used to
/// reduce K[C] coefficients modulo an ideal of the parameter ring.
template <class R>
using CoefficientReducer = std::function<R(const R&)>;

struct MonomialOrderLess {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
};

/// Complete reduction of f by G. The order-maximal reducible term is treated
/// first and the divisor is the first element of G (list order) whose head
/// divides it. Divisors must be monic, so no coefficient is ever divided.
template <class R>
NormalFormResult<R> normal_form(const Polynomial<R>& f, const std::vector<Polynomial<R>>& G, const TermOrder& order,
                                bool track_quotients = false, const CoefficientReducer<R>* reducer = nullptr) {
  std::vector<Monomial> heads;
  heads.reserve(G.size());
  for (const auto& g : G) {
    if (g.nvars() != f.nvars()) fail(ErrorKind::Ring, "divisor from a different ring");
    const auto& h = g.head(order);
    if (!h.c.is_one()) fail(ErrorKind::Monicity, "normal form needs monic divisors");
    heads.push_back(h.m);
  }

  std::map<Monomial, R, MonomialOrderLess> work(MonomialOrderLess{&order});
  for (const auto& t : f.terms()) work.emplace(t.m, t.c);

  std::vector<Term<R>> rem;
  std::vector<std::vector<Term<R>>> quot(track_quotients ? G.size() : 0);

  while (!work.empty()) {
    auto top = std::prev(work.end());
    if (reducer) {
      R c = (*reducer)(top->second);
      if (c.is_zero()) {
        work.erase(top);
        continue;
      }
      top->second = std::move(c);
    }
    std::size_t i = 0;
    while (i < heads.size() && !heads[i].divides(top->first)) ++i;
    if (i == heads.size()) {
      rem.push_back({top->first, std::move(top->second)});
      work.erase(top);
      continue;
    }
    Monomial q = heads[i].quotient_of(top->first);
    R c = std::move(top->second);
    work.erase(top);
    for (const auto& t : G[i].terms()) {
      if (t.m == heads[i]) continue;
      Monomial key = t.m * q;
      R delta = c * t.c;
      auto [it, inserted] = work.try_emplace(std::move(key), -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    if (track_quotients) quot[i].push_back({std::move(q), std::move(c)});
  }

  NormalFormResult<R> out{Polynomial<R>(f.ring(), std::move(rem)), {}};
  if (track_quotients) {
    out.quotients.reserve(G.size());
    for (auto& q : quot) out.quotients.emplace_back(f.ring(), std::move(q));
  }
  return out;
}

template <class R>
Polynomial<R> reduce(const Polynomial<R>& f, const std::vector<Polynomial<R>>& G, const TermOrder& order) {
  return normal_form(f, G, order).remainder;
}

/// lcm/Ht(f) * f - lcm/Ht(g) * g for monic f, g.
template <class R>
Polynomial<R> s_polynomial(const Polynomial<R>& f, const Polynomial<R>& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "S-polynomial of the zero polynomial");
  const auto& hf = f.head(order);
  const auto& hg = g.head(order);
  if (!hf.c.is_one() || !hg.c.is_one()) fail(ErrorKind::Monicity, "S-polynomial needs monic inputs");
  Monomial l = lcm(hf.m, hg.m);
  return f.shift(hf.m.quotient_of(l)) - g.shift(hg.m.quotient_of(l));
}

}  // namespace liftings

#pragma once

// Text syntax for polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor (['*'] factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | name | '(' expr ')'
//
// Names are resolved by a caller-supplied lookup, so the same parser serves
// K[x], K[C] and K[C][x, xn]. An identifier that is not a declared name is
// split greedily into declared names ("x0x1" reads as x0*x1).

#include <cctype>
#include <functional>
#include <gmpxx.h>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liftings/core/polynomial.hpp"
#include "liftings/error.hpp"

namespace liftings {

/// Variable names for each level of a coefficient tower, outermost first.
using NameStack = std::vector<std::vector<std::string>>;

inline std::vector<std::string> default_names(const std::string& stem, std::size_t n, std::size_t first = 0) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + first));
  return v;
}

namespace detail {

template <class C>
std::string format_coefficient(const C& c, const NameStack&, std::size_t) {
  return c.to_string();
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "?" + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

template <class R>
std::string format(const Polynomial<R>& p, const NameStack& names, std::size_t level = 0);

namespace detail {

template <class R>
std::string format_coefficient(const Polynomial<R>& c, const NameStack& names, std::size_t level) {
  return format(c, names, level);
}

template <class C>
bool is_minus_one(const C& c) {
  return (-c).is_one();
}

}  // namespace detail

/// Prints terms in descending degrevlex order, i.e. higher degree first.
template <class R>
std::string format(const Polynomial<R>& p, const NameStack& names, std::size_t level) {
  if (p.is_zero()) return "0";
  static const std::vector<std::string> none;
  const auto& vn = level < names.size() ? names[level] : none;
  std::vector<const Term<R>*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  TermOrder ord = TermOrder::degrevlex();
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->m, b->m); });

  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& [m, c] = *ts[k];
    std::string piece;
    if (m.is_one()) {
      piece = detail::format_coefficient(c, names, level + 1);
      if (!c.is_atomic() && ts.size() > 1) piece = "(" + piece + ")";
    } else {
      std::string mono = detail::format_monomial(m, vn);
      if (c.is_one()) {
        piece = mono;
      } else if (detail::is_minus_one(c)) {
        piece = "-" + mono;
      } else {
        std::string cs = detail::format_coefficient(c, names, level + 1);
        piece = (c.is_atomic() ? cs : "(" + cs + ")") + "*" + mono;
      }
    }
    if (k == 0) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

template <class R>
std::string Polynomial<R>::to_string() const {
  NameStack names;
  return format(*this, names);
}

/// Generic recursive-descent parser producing values of type P.
template <class P>
class ExpressionParser {
 public:
  using Lookup = std::function<std::optional<P>(const std::string&)>;
  using Constant = std::function<P(const mpq_class&)>;

  ExpressionParser(Lookup lookup, Constant constant, std::vector<std::string> known_names)
      : lookup_(std::move(lookup)), constant_(std::move(constant)), names_(std::move(known_names)) {}

  P parse(const std::string& text) {
    s_ = text;
    pos_ = 0;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    P v = expr();
    skip();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + what + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  P expr() {
    P v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  P term() {
    bool neg = false;
    while (true) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) {}
      else break;
    }
    P v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (at_factor_start()) {
        v = v * factor();
      } else {
        break;
      }
    }
    return neg ? -v : v;
  }

  P factor() {
    P v = primary();
    if (eat('^')) {
      skip();
      mpz_class e = integer();
      if (e > 255) error("exponent too large");
      v = power(v, static_cast<unsigned>(e.get_ui()));
    }
    return v;
  }

  P power(const P& b, unsigned e) {
    P r = constant_(mpq_class(1));
    for (unsigned i = 0; i < e; ++i) r = r * b;
    return r;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  P primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P v = expr();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(integer());
      if (eat('/')) {
        mpz_class d = integer();
        if (d == 0) error("zero denominator");
        q /= d;
      }
      return constant_(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (auto v = lookup_(id)) return *v;
      return split_identifier(id, start);
    }
    error(std::string("unexpected '") + c + "'");
  }

  // "x0x1" when no variable of that name exists: longest-prefix split.
  P split_identifier(const std::string& id, std::size_t start) {
    std::optional<P> acc;
    std::size_t i = 0;
    while (i < id.size()) {
      std::size_t best = 0;
      for (const auto& n : names_)
        if (n.size() > best && id.compare(i, n.size(), n) == 0) best = n.size();
      if (best == 0) {
        pos_ = start;
        error("unknown variable '" + id + "'");
      }
      P v = *lookup_(id.substr(i, best));
      acc = acc ? *acc * v : v;
      i += best;
    }
    return *acc;
  }

  Lookup lookup_;
  Constant constant_;
  std::vector<std::string> names_;
  std::string s_;
  std::size_t pos_ = 0;
};

/// Parses a polynomial of K[x] (R a field) with the given variable names.
template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const PolyRing<K>& ring, const std::vector<std::string>& names) {
  if (names.size() != ring.nvars) fail(ErrorKind::Dimension, "name list does not match ring size");
  ExpressionParser<Polynomial<K>> p(
      [&](const std::string& id) -> std::optional<Polynomial<K>> {
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == id) return ring.variable(i);
        return std::nullopt;
      },
      [&](const mpq_class& q) { return ring.from_rational(q); }, names);
  return p.parse(text);
}

/// Parses an element of K[C][x]: names[0] are the x variables, names[1] the
/// coefficient variables.
template <class K>
Polynomial<Polynomial<K>> parse_polynomial(const std::string& text, const PolyRing<Polynomial<K>>& ring,
                                           const NameStack& names) {
  if (names.size() < 2 || names[0].size() != ring.nvars || names[1].size() != ring.base.nvars)
    fail(ErrorKind::Dimension, "name lists do not match ring sizes");
  std::vector<std::string> all = names[0];
  all.insert(all.end(), names[1].begin(), names[1].end());
  ExpressionParser<Polynomial<Polynomial<K>>> p(
      [&](const std::string& id) -> std::optional<Polynomial<Polynomial<K>>> {
        for (std::size_t i = 0; i < names[0].size(); ++i)
          if (names[0][i] == id) return ring.variable(i);
        for (std::size_t i = 0; i < names[1].size(); ++i)
          if (names[1][i] == id) return ring.constant(ring.base.variable(i));
        return std::nullopt;
      },
      [&](const mpq_class& q) { return ring.from_rational(q); }, all);
  return p.parse(text);
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Polynomial<R>& p) {
  return os << p.to_string();
}

}  // namespace liftings

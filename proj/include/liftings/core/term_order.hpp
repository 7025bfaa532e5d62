#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "liftings/core/monomial.hpp"
#include "liftings/error.hpp"

namespace liftings {

/// A term order on exponent vectors. Variables are ranked x0 > x1 > ... > x_last.
///
/// Kinds:
///  - Lex, DegLex, DegRevLex: the classical orders.
///  - WeightedLex(w): compares w-weighted degree, then lex with the variables
///    ranked by decreasing weight (ties: lower index ranks higher). On
///    w-homogeneous polynomials this is plain lex on the weight-sorted variables.
///  - Degreverse(base): graded; for equal degree the term with the larger
///    exponent of the last variable is smaller; otherwise `base` decides on the
///    remaining variables.
///  - Block(outer, outer_order, inner_order): elimination order, outer variables
///    compared first.
class TermOrder {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, WeightedLex, Degreverse, Block };

  TermOrder() : kind_(Kind::DegRevLex) {}

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder deglex() { return TermOrder(Kind::DegLex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }

  static TermOrder weighted_lex(std::vector<long long> weights) {
    TermOrder o(Kind::WeightedLex);
    o.perm_.resize(weights.size());
    std::iota(o.perm_.begin(), o.perm_.end(), 0);
    std::stable_sort(o.perm_.begin(), o.perm_.end(),
                     [&](std::uint16_t a, std::uint16_t b) { return weights[a] > weights[b]; });
    o.weights_ = std::move(weights);
    return o;
  }

  static TermOrder degreverse(const TermOrder& base) {
    TermOrder o(Kind::Degreverse);
    o.base_ = std::make_shared<TermOrder>(base);
    return o;
  }

  /// Elimination order on `nvars` variables: the `outer` variables (compared
  /// with `outer_order`, in the listed order) dominate the rest.
  static TermOrder block(std::size_t nvars, const std::vector<std::size_t>& outer,
                         const TermOrder& outer_order, const TermOrder& inner_order) {
    TermOrder o(Kind::Block);
    o.nvars_ = nvars;
    std::vector<bool> is_outer(nvars, false);
    for (auto v : outer) {
      if (v >= nvars || is_outer[v]) fail(ErrorKind::Argument, "invalid block variable list");
      is_outer[v] = true;
      o.outer_idx_.push_back(static_cast<std::uint16_t>(v));
    }
    for (std::size_t v = 0; v < nvars; ++v)
      if (!is_outer[v]) o.inner_idx_.push_back(static_cast<std::uint16_t>(v));
    o.base_ = std::make_shared<TermOrder>(outer_order);
    o.inner_ = std::make_shared<TermOrder>(inner_order);
    return o;
  }

  Kind kind() const { return kind_; }
  const TermOrder* base() const { return base_.get(); }
  const std::vector<long long>& weights() const { return weights_; }

  /// -1, 0, +1.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) fail(ErrorKind::Dimension, "comparing exponent vectors of different length");
    return cmp_on(a, b, nullptr, a.size());
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::DegLex: return "deglex";
      case Kind::DegRevLex: return "degrevlex";
      case Kind::WeightedLex: {
        std::string s = "wlex(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
        return s + ")";
      }
      case Kind::Degreverse: return "degreverse(" + base_->name() + ")";
      case Kind::Block: {
        std::string s = "block([";
        for (std::size_t i = 0; i < outer_idx_.size(); ++i) s += (i ? "," : "") + std::to_string(outer_idx_[i]);
        return s + "]," + base_->name() + "," + inner_->name() + ")";
      }
    }
    return "?";
  }

 private:
  explicit TermOrder(Kind k) : kind_(k) {}

  static unsigned at(const Monomial& m, const std::uint16_t* idx, std::size_t k) {
    return idx ? m[idx[k]] : m[k];
  }
  static unsigned degree_on(const Monomial& m, const std::uint16_t* idx, std::size_t len) {
    if (!idx && len == m.size()) return m.degree();
    unsigned d = 0;
    for (std::size_t k = 0; k < len; ++k) d += at(m, idx, k);
    return d;
  }
  static int lex_on(const Monomial& a, const Monomial& b, const std::uint16_t* idx, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
      unsigned va = at(a, idx, k), vb = at(b, idx, k);
      if (va != vb) return va > vb ? 1 : -1;
    }
    return 0;
  }

  int cmp_on(const Monomial& a, const Monomial& b, const std::uint16_t* idx, std::size_t len) const {
    switch (kind_) {
      case Kind::Lex:
        return lex_on(a, b, idx, len);
      case Kind::DegLex: {
        unsigned da = degree_on(a, idx, len), db = degree_on(b, idx, len);
        if (da != db) return da > db ? 1 : -1;
        return lex_on(a, b, idx, len);
      }
      case Kind::DegRevLex: {
        unsigned da = degree_on(a, idx, len), db = degree_on(b, idx, len);
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t k = len; k-- > 0;) {
          unsigned va = at(a, idx, k), vb = at(b, idx, k);
          if (va != vb) return va < vb ? 1 : -1;
        }
        return 0;
      }
      case Kind::WeightedLex: {
        if (weights_.size() != len) fail(ErrorKind::Dimension, "weight vector length does not match variable count");
        long long wa = 0, wb = 0;
        for (std::size_t k = 0; k < len; ++k) {
          wa += weights_[k] * at(a, idx, k);
          wb += weights_[k] * at(b, idx, k);
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        for (std::size_t k = 0; k < len; ++k) {
          unsigned va = at(a, idx, perm_[k]), vb = at(b, idx, perm_[k]);
          if (va != vb) return va > vb ? 1 : -1;
        }
        return 0;
      }
      case Kind::Degreverse: {
        if (len == 0) return 0;
        unsigned da = degree_on(a, idx, len), db = degree_on(b, idx, len);
        if (da != db) return da > db ? 1 : -1;
        unsigned la = at(a, idx, len - 1), lb = at(b, idx, len - 1);
        if (la != lb) return la > lb ? -1 : 1;
        return base_->cmp_on(a, b, idx, len - 1);
      }
      case Kind::Block: {
        if (idx != nullptr || len != nvars_)
          fail(ErrorKind::Dimension, "block order applied to a ring of the wrong size");
        int c = base_->cmp_on(a, b, outer_idx_.data(), outer_idx_.size());
        if (c != 0) return c;
        return inner_->cmp_on(a, b, inner_idx_.data(), inner_idx_.size());
      }
    }
    return 0;
  }

  Kind kind_;
  std::vector<long long> weights_;
  std::vector<std::uint16_t> perm_;
  std::shared_ptr<const TermOrder> base_, inner_;
  std::vector<std::uint16_t> outer_idx_, inner_idx_;
  std::size_t nvars_ = 0;
};

/// Looks up an order by its textual name: lex, deglex, degrevlex.
inline TermOrder order_from_name(const std::string& name) {
  if (name == "lex") return TermOrder::lex();
  if (name == "deglex") return TermOrder::deglex();
  if (name == "degrevlex") return TermOrder::degrevlex();
  fail(ErrorKind::Argument, "unknown term order '" + name + "'");
}

}  // namespace liftings

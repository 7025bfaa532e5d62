#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>
#include <string>

#include "liftings/error.hpp"

namespace liftings {

/// Exponent vector x^a over a fixed number of variables.
///
/// Entries are bounded (uint8) and every multiplication is overflow-checked;
/// the total degree is cached because graded orders query it constantly.
class Monomial {
 public:
  using exponent_type = std::uint8_t;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<int> exps) {
    e_.reserve(exps.size());
    for (int v : exps) {
      if (v < 0 || static_cast<unsigned>(v) > kMaxExponent)
        fail(ErrorKind::Overflow, "exponent out of range");
      e_.push_back(static_cast<exponent_type>(v));
      deg_ += static_cast<unsigned>(v);
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const exponent_type* data() const { return e_.data(); }

  void set(std::size_t i, unsigned v) {
    if (v > kMaxExponent) fail(ErrorKind::Overflow, "exponent overflow");
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<exponent_type>(v);
  }

  /// Sum of weight[i] * a[i].
  template <class Weights>
  long long weighted_degree(const Weights& w) const {
    long long s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) s += static_cast<long long>(w[i]) * e_[i];
    return s;
  }

  Monomial& operator*=(const Monomial& o) {
    check_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      unsigned v = unsigned(e_[i]) + o.e_[i];
      if (v > kMaxExponent) fail(ErrorKind::Overflow, "exponent overflow in monomial product");
      e_[i] = static_cast<exponent_type>(v);
    }
    deg_ += o.deg_;
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial q(o);
    for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] = static_cast<exponent_type>(o.e_[i] - e_[i]);
    q.deg_ = o.deg_ - deg_;
    return q;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial r(a);
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  /// Canonical storage order (plain lexicographic on the exponent array);
  /// unrelated to any term order used for head-term queries.
  friend bool canonical_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
  }

  std::size_t hash() const {
    std::size_t h = e_.size();
    for (auto v : e_) h = h * 131 + v;
    return h;
  }

  /// Drops variable i (used when leaving an auxiliary variable).
  Monomial without(std::size_t i) const {
    Monomial r(e_.size() - 1);
    for (std::size_t k = 0, j = 0; k < e_.size(); ++k)
      if (k != i) r.e_[j++] = e_[k];
    r.deg_ = deg_ - e_[i];
    return r;
  }
  /// Inserts a zero exponent at position i.
  Monomial with_new_variable(std::size_t i) const {
    Monomial r(e_.size() + 1);
    for (std::size_t k = 0, j = 0; j < r.e_.size(); ++j)
      if (j != i) r.e_[j] = e_[k++];
    r.deg_ = deg_;
    return r;
  }

 private:
  void check_size(const Monomial& o) const {
    if (o.e_.size() != e_.size()) fail(ErrorKind::Dimension, "exponent vectors of different length");
  }

  boost::container::small_vector<exponent_type, 8> e_;
  unsigned deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All exponent vectors of total degree d in n variables, in lex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (int v = static_cast<int>(left); v >= 0; --v) {
      cur.set(i, static_cast<unsigned>(v));
      rec(i + 1, left - static_cast<unsigned>(v));
    }
    cur.set(i, 0);
  };
  rec(0, d);
  return out;
}

}  // namespace liftings

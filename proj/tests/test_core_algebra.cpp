#include <gtest/gtest.h>

#include <random>

#include "liftings/core/field.hpp"
#include "liftings/core/monomial.hpp"
#include "liftings/core/polynomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/core/text.hpp"

using namespace liftings;

namespace {

using Q = Rational;
using PQ = Polynomial<Q>;

const std::vector<std::string> X4 = {"x0", "x1", "x2", "x3"};

PQ P(const std::string& s, std::size_t n = 4) {
  PolyRing<Q> ring(n, RationalField{});
  std::vector<std::string> names(X4.begin(), X4.begin() + static_cast<long>(n));
  return parse_polynomial(s, ring, names);
}

Monomial random_monomial(std::mt19937& rng, std::size_t n, unsigned maxe) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(maxe));
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(d(rng)));
  return m;
}

std::vector<TermOrder> all_orders() {
  return {TermOrder::lex(),
          TermOrder::deglex(),
          TermOrder::degrevlex(),
          TermOrder::weighted_lex({2, 1, 1, 3}),
          TermOrder::degreverse(TermOrder::deglex()),
          TermOrder::degreverse(TermOrder::degrevlex()),
          TermOrder::degreverse(TermOrder::lex()),
          TermOrder::block(4, {0, 2}, TermOrder::degrevlex(), TermOrder::lex())};
}

}  // namespace

TEST(Field, RationalCanonical) {
  Q a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + Q(3, 2)).to_string(), "0");
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(Q::parse("10/4").to_string(), "5/2");
  EXPECT_THROW(Q::parse("1/0"), Error);
}

TEST(Field, PrimeFieldChecks) {
  EXPECT_THROW(PrimeField(12), Error);
  EXPECT_THROW(PrimeField(4294967311ULL), Error);
  PrimeField f(13);
  ModP a = f.from_integer(-3);
  EXPECT_EQ(a.value(), 10u);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(f.from_rational(mpq_class(1, 2)).value(), 7u);
  PrimeField g(7);
  EXPECT_THROW(a + g.one(), Error);
}

TEST(TermOrder, DegreverseExamples) {
  TermOrder o = TermOrder::degreverse(TermOrder::deglex());
  // x2^3 x3 vs x1 x3^2: larger x3 exponent is smaller
  Monomial a{0, 0, 3, 1}, b{0, 1, 0, 2};
  EXPECT_TRUE(o.less(b, a));
  EXPECT_EQ(o.compare(a, a), 0);
  Monomial c{1, 0, 0, 1}, d{0, 1, 0, 1};
  EXPECT_TRUE(o.less(d, c));
  EXPECT_THROW(o.compare(Monomial{1, 0}, Monomial{1, 0, 0}), Error);
}

TEST(TermOrder, TotalMultiplicativeWellFounded) {
  std::mt19937 rng(7);
  for (const auto& o : all_orders()) {
    Monomial one(4);
    for (int k = 0; k < 400; ++k) {
      Monomial a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3), c = random_monomial(rng, 4, 3);
      int ab = o.compare(a, b), ba = o.compare(b, a);
      EXPECT_EQ(ab, -ba) << o.name();
      EXPECT_EQ(ab == 0, a == b) << o.name();
      EXPECT_EQ(o.compare(a * c, b * c), ab) << o.name();
      EXPECT_LE(o.compare(one, a), 0) << o.name();
    }
  }
}

TEST(TermOrder, DegreverseRestrictsToBase) {
  // exhaustive up to degree 6 in 4 variables, terms free of x3
  for (const auto& base : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()}) {
    TermOrder o = TermOrder::degreverse(base);
    std::vector<Monomial> ts;
    for (unsigned d = 0; d <= 6; ++d)
      for (const auto& m : monomials_of_degree(3, d)) ts.push_back(m.with_new_variable(3));
    for (const auto& a : ts)
      for (const auto& b : ts) {
        if (a.degree() != b.degree()) continue;
        ASSERT_EQ(o.compare(a, b), base.compare(a.without(3), b.without(3)));
      }
  }
}

TEST(TermOrder, BlockEliminates) {
  TermOrder o = TermOrder::block(4, {1, 3}, TermOrder::degrevlex(), TermOrder::degrevlex());
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    Monomial a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3);
    a.set(1, a[1] + 1);
    b.set(1, 0);
    b.set(3, 0);
    EXPECT_TRUE(o.greater(a, b));
  }
}

TEST(TermOrder, WeightedLexTieBreak) {
  TermOrder o = TermOrder::weighted_lex({1, 2, 1});
  // weight first
  EXPECT_TRUE(o.greater(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
  // equal weight: variable 1 first, then lower index
  EXPECT_TRUE(o.greater(Monomial{1, 0, 0}, Monomial{0, 0, 1}));
}

TEST(Polynomial, HeadTerms) {
  PQ f = P("x1^4 + x0*x2^3");
  EXPECT_EQ(f.head_term(TermOrder::degrevlex()), (Monomial{0, 4, 0, 0}));
  EXPECT_EQ(f.head_term(TermOrder::deglex()), (Monomial{1, 0, 3, 0}));
  PQ m = P("5*x0*x3");
  EXPECT_EQ(m.head_coefficient(TermOrder::lex()), Q(5));
  EXPECT_THROW(P("0").head(TermOrder::lex()), Error);
}

TEST(Polynomial, Arithmetic) {
  PQ f = P("x0^2 + 3*x1*x2 - 1/2*x3^2");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(P("(x0 + x3)*x0"), P("x0^2 + x0*x3"));
  EXPECT_EQ(P("(x1 - x3)*(x1 + x3)"), P("x1^2 - x3^2"));
  PolyRing<Q> r3(3, RationalField{});
  EXPECT_THROW(f + r3.one(), Error);
}

TEST(Polynomial, RingAxiomsRandom) {
  std::mt19937 rng(11);
  PolyRing<Q> ring(4, RationalField{});
  auto rnd = [&]() {
    std::uniform_int_distribution<int> c(-5, 5), n(1, 5);
    PQ p(ring);
    int k = n(rng);
    for (int i = 0; i < k; ++i) p += ring.monomial(Q(c(rng)), random_monomial(rng, 4, 2));
    return p;
  };
  for (int k = 0; k < 50; ++k) {
    PQ a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + (b + c), (a + b) + c);
    Monomial m = random_monomial(rng, 4, 2);
    PQ s = a.shift(m);
    ASSERT_EQ(s.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(s.terms()[i].m, a.terms()[i].m * m);
  }
}

TEST(Polynomial, XnPowerDivisor) {
  EXPECT_EQ(xn_power_divisor(P("x3^2*(x0 + x3)")), 2u);
  EXPECT_EQ(xn_power_divisor(P("x0^2")), 0u);
  EXPECT_THROW(xn_power_divisor(P("0")), Error);
}

TEST(Polynomial, DegreverseHeadBoundsTheXnPower) {
  // homogeneous f whose degreverse head is divisible by x3^r has every term divisible
  std::mt19937 rng(5);
  TermOrder o = TermOrder::degreverse(TermOrder::degrevlex());
  PolyRing<Q> ring(4, RationalField{});
  for (int k = 0; k < 200; ++k) {
    unsigned d = 1 + rng() % 4;
    auto ms = monomials_of_degree(4, d);
    PQ f(ring);
    for (int i = 0; i < 4; ++i) f += ring.monomial(Q(1 + static_cast<long long>(rng() % 5)), ms[rng() % ms.size()]);
    if (f.is_zero()) continue;
    unsigned r = f.head_term(o)[3];
    EXPECT_GE(xn_power_divisor(f), r);
  }
}

TEST(Text, ParseAndPrint) {
  PQ f = P("2x0x1 - x3^2 + 1/3*x1");
  EXPECT_EQ(format(f, {X4}), "2*x0*x1 - x3^2 + 1/3*x1");
  EXPECT_EQ(P(format(f, {X4})), f);
  EXPECT_THROW(P("x0 + y"), Error);
  EXPECT_THROW(P("x0 +"), Error);
  EXPECT_THROW(P("3/0"), Error);
}

TEST(Text, NestedParse) {
  PolyRing<Q> cring(2, RationalField{});
  PolyRing<PQ> ring(2, cring);
  NameStack names = {{"x", "y"}, {"C1", "C2"}};
  auto f = parse_polynomial("x^2 + (C1 - 2*C2)*x*y + C1^2*y^2 - C2", ring, names);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(format(f, names), "x^2 + (C1 - 2*C2)*x*y + C1^2*y^2 - C2");
}

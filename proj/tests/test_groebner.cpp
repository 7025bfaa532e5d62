#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace liftings;
using namespace fixtures;

namespace {

const TermOrder DRL = TermOrder::degrevlex();
const TermOrder DL = TermOrder::deglex();

PolyRing<Q> Q4(4, RationalField{});

// K[C1, C5][x0..x3] for the nested S-polynomial check
using Nested = Polynomial<PQ>;
Nested nested(const std::string& s) {
  PolyRing<Q> cr(2, RationalField{});
  PolyRing<PQ> ring(4, cr);
  return parse_polynomial(s, ring, NameStack{xs(4), {"C1", "C5"}});
}

}  // namespace

TEST(NormalForm, SelfReductionAndMonomialMembership) {
  PQ g = q("x0^2 + x1*x2", 3);
  auto nf = normal_form(g, {g}, DRL, true);
  EXPECT_TRUE(nf.remainder.is_zero());
  ASSERT_EQ(nf.quotients.size(), 1u);
  EXPECT_TRUE(nf.quotients[0].is_one());
  EXPECT_TRUE(normal_form(q("x0^2*x1", 3), {q("x0^2", 3), q("x0*x1", 3)}, DRL).remainder.is_zero());
}

TEST(NormalForm, CofactorIdentityAndFirstMatch) {
  // x0*x1 is divisible by both heads; the first listed divisor must be used
  std::vector<PQ> G = {q("x0 + x2", 3), q("x1 + x2", 3)};
  auto nf = normal_form(q("x0*x1", 3), G, DRL, true);
  EXPECT_EQ(nf.quotients[0], q("x1", 3));
  EXPECT_EQ(nf.quotients[1], q("-x2", 3));
  EXPECT_EQ(nf.remainder, q("x2^2", 3));
  std::mt19937 rng(4);
  auto gens = qideal({"x0^2 - x1*x2", "x1^3 + x0*x2^2", "x0*x1 - x2^2"}, 3);
  for (int k = 0; k < 40; ++k) {
    PQ f(PolyRing<Q>(3, RationalField{}));
    for (int i = 0; i < 5; ++i) {
      auto ms = monomials_of_degree(3, 1 + rng() % 4);
      f += f.ring().monomial(Q(static_cast<long>(rng() % 9) - 4), ms[rng() % ms.size()]);
    }
    auto r = normal_form(f, gens, DRL, true);
    PQ back = r.remainder;
    for (std::size_t i = 0; i < gens.size(); ++i) back += r.quotients[i] * gens[i];
    EXPECT_EQ(back, f);
  }
}

TEST(NormalForm, RejectsNonMonicDivisors) {
  EXPECT_THROW(normal_form(q("x0^2", 2), {q("2*x0", 2)}, DRL), Error);
}

TEST(NormalForm, LinearAndIdempotentModuloBasis) {
  auto G = buchberger(qideal({"x0^2 - x1*x2", "x1^2 - x0*x2"}, 3), DRL).elements;
  std::mt19937 rng(9);
  PolyRing<Q> r3(3, RationalField{});
  auto rnd = [&] {
    PQ f(r3);
    for (int i = 0; i < 4; ++i) {
      auto ms = monomials_of_degree(3, 3);
      f += r3.monomial(Q(static_cast<long>(rng() % 5) - 2), ms[rng() % ms.size()]);
    }
    return f;
  };
  for (int k = 0; k < 30; ++k) {
    PQ f = rnd(), g = rnd();
    PQ nf_fg = reduce(f + g, G, DRL);
    EXPECT_EQ(nf_fg, reduce(reduce(f, G, DRL) + reduce(g, G, DRL), G, DRL));
    EXPECT_EQ(reduce(nf_fg, G, DRL), nf_fg);
  }
}

TEST(SPolynomial, MonomialsAndNestedCoefficients) {
  PQ a = q("x0^2", 2), b = q("x0*x1", 2);
  EXPECT_TRUE(s_polynomial(a, b, DRL).is_zero());
  EXPECT_TRUE(s_polynomial(a, a, DRL).is_zero());
  TermOrder o = TermOrder::degreverse(DL);
  Nested f = nested("x0^2 + C1*x0*x3"), g = nested("x0*x1 + C5*x0*x3");
  EXPECT_EQ(s_polynomial(f, g, o), nested("C1*x0*x1*x3 - C5*x0^2*x3"));
  EXPECT_THROW(s_polynomial(q("0", 2), a, DRL), Error);
}

TEST(Buchberger, InitialIdealOfAcmIdeal) {
  auto gb = buchberger(acm_codim2(), DRL);
  EXPECT_TRUE(gb.reduced);
  std::vector<Monomial> expect = {Monomial{1, 1, 0}, Monomial{2, 0, 0}, Monomial{0, 3, 0}};
  EXPECT_EQ(gb.heads(), expect);
}

TEST(Buchberger, DeglexBasisGainsAFifthPower) {
  auto gb = buchberger(two_orders(), DL);
  std::vector<PQ> expect = qideal({"x0*x1", "x0^2", "x1^4 + x0*x2^3", "x1^5"}, 3);
  ASSERT_EQ(gb.elements.size(), 4u);
  for (const auto& e : expect) EXPECT_NE(std::find(gb.elements.begin(), gb.elements.end(), e), gb.elements.end());
  EXPECT_TRUE(is_reduced(gb.elements, DL));
}

TEST(Buchberger, MonomialInputIsMinimalized) {
  auto gb = buchberger(qideal({"x0^2", "x0^2*x1", "x1^3", "x0*x1^3"}, 2), DRL);
  EXPECT_EQ(gb.elements, qideal({"x0^2", "x1^3"}, 2));
}

TEST(Buchberger, RejectsInhomogeneousInput) {
  EXPECT_THROW(buchberger(qideal({"x0^2 + x1"}, 2), DRL), Error);
  try {
    buchberger(qideal({"x0^2 + x1"}, 2), DRL);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Homogeneity);
  }
}

TEST(Buchberger, AgreesWithMacaulayMatrixDimensions) {
  // independent oracle: dim I_d by linear algebra equals the number of
  // degree-d terms in the initial ideal of the computed basis
  for (const auto& I : random_ideals(21, 15)) {
    for (const auto& o : {DRL, DL, TermOrder::lex()}) {
      auto gb = buchberger(I, o);
      std::size_t n = I.front().nvars();
      for (unsigned d = 1; d <= 4; ++d) EXPECT_EQ(graded_dimension(I, d), monomials_in(gb.heads(), n, d)) << o.name();
    }
  }
}

TEST(Buchberger, PermutationInvariantAndAuditable) {
  std::mt19937 rng(5);
  for (auto I : random_ideals(77, 20)) {
    auto a = buchberger(I, DRL);
    std::shuffle(I.begin(), I.end(), rng);
    auto b = buchberger(I, DRL);
    EXPECT_EQ(a.elements, b.elements);
    EXPECT_TRUE(is_groebner_basis(a.elements, DRL));
    EXPECT_TRUE(is_reduced(a.elements, DRL));
    for (std::size_t i = 1; i < a.elements.size(); ++i)
      EXPECT_TRUE(DRL.less(a.elements[i - 1].head_term(DRL), a.elements[i].head_term(DRL)));
  }
}

TEST(Syzygies, BidiagonalRowsOfMonomialIdeals) {
  auto rows = syzygies(qideal({"x0^2", "x0*x1", "x1^3"}, 2), DRL);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], qideal({"x1", "-x0", "0"}, 2));
  EXPECT_EQ(rows[1], qideal({"0", "x1^2", "-x0"}, 2));
  auto G2 = qideal({"x0^2", "x0*x1", "x1^2"}, 2);
  auto rows2 = syzygies(G2, DRL);
  ASSERT_EQ(rows2.size(), 2u);
  EXPECT_EQ(rows2[0], qideal({"x1", "-x0", "0"}, 2));
  EXPECT_EQ(rows2[1], qideal({"0", "x1", "-x0"}, 2));
  for (const auto& r : rows2) EXPECT_TRUE(is_syzygy(r, G2));
  EXPECT_TRUE(syzygies(qideal({"x0^2"}, 2), DRL).empty());
}

TEST(Syzygies, RowsOfPolynomialBasesAreExact) {
  for (const auto& I : random_ideals(3, 10)) {
    auto G = buchberger(I, DRL).elements;
    for (const auto& r : syzygies(G, DRL)) EXPECT_TRUE(is_syzygy(r, G));
  }
  EXPECT_THROW(syzygies(qideal({"x0^2 + x1^2", "x0*x1"}, 2), DRL), Error);
}

TEST(Eliminate, KeepsThePureSubideal) {
  auto I = qideal({"x0^2 + x0*x3 - 3*x3^2", "x1"}, 4);
  auto E = eliminate(I, {1, 2, 3}, 4);
  EXPECT_TRUE(ideal_equal(E, qideal({"x1"}, 4)));
  auto Z = eliminate(qideal({"x0", "x3"}, 4), {1, 2}, 4);
  EXPECT_TRUE(Z.empty());
}

TEST(Intersect, IdempotentAndContainedInBoth) {
  auto I = acm_codim2();
  EXPECT_TRUE(ideal_equal(intersect(I, I, DRL).elements, I));
  for (int k = 0; k < 10; ++k) {
    auto pair = random_ideals(100 + k, 2);
    if (pair[0].front().nvars() != pair[1].front().nvars()) continue;
    auto cap = intersect(pair[0], pair[1], DRL).elements;
    auto gi = buchberger(pair[0], DRL), gj = buchberger(pair[1], DRL);
    EXPECT_TRUE(ideal_contains(gi, cap));
    EXPECT_TRUE(ideal_contains(gj, cap));
    // I*J is inside the intersection
    auto gc = buchberger(cap, DRL);
    for (const auto& f : pair[0])
      for (const auto& g : pair[1]) EXPECT_TRUE(ideal_member(f * g, gc));
  }
  EXPECT_THROW(intersect(qideal({"x0"}, 2), qideal({"x0"}, 3), DRL), Error);
}

TEST(Intersect, ThreeComponentsOfTheLiftedAcmIdeal) {
  auto I = qideal({"x0^2 - x1^2 + x0*x3 + 2*x1*x3 - 3*x3^2", "x0*x1 + 2*x1^2", "x1^3 - x1*x3^2"}, 4);
  auto cap = intersect_all<Q>({qideal({"x0 + 2*x3", "x1 - x3"}, 4), qideal({"x0 - 2*x3", "x1 + x3"}, 4),
                               qideal({"x0^2 + x0*x3 - 3*x3^2", "x1"}, 4)},
                              DRL);
  EXPECT_TRUE(ideal_equal(cap.elements, I));
}

TEST(Saturation, StripsLastVariable) {
  auto S = saturate_xn(qideal({"x0*x2", "x1*x2^2"}, 3));
  EXPECT_TRUE(ideal_equal(S.elements, qideal({"x0", "x1"}, 3)));
  auto J = qideal({"x0^2", "x1^3"}, 3);
  EXPECT_TRUE(ideal_equal(saturate_xn(J).elements, J));
  for (const auto& I : random_ideals(8, 12)) {
    auto s = saturate_xn(I);
    EXPECT_TRUE(ideal_contains(s, I));
    EXPECT_EQ(saturate_xn(s.elements).elements, s.elements);
  }
}

TEST(Truncation, InverseOfSaturation) {
  auto H = insert_variable_all(maximal_square());
  auto G = buchberger(H, TermOrder::degreverse(DRL)).elements;
  auto T = truncate(G, 3);
  EXPECT_TRUE(is_groebner_basis(
      buchberger(T, TermOrder::degreverse(DRL)).elements, TermOrder::degreverse(DRL)));
  EXPECT_TRUE(ideal_equal(saturate_xn(T).elements, H));
  EXPECT_EQ(truncate(G, 1), G);
  EXPECT_THROW(truncate(G, -1), Error);
  auto P = truncate(qideal({"x0"}, 2), 2);
  EXPECT_TRUE(ideal_equal(P, qideal({"x0^2", "x0*x1"}, 2)));
}

TEST(Truncation, InitialIdealOfTruncation) {
  for (const auto& I : random_ideals(31, 10)) {
    auto G = buchberger(I, DRL).elements;
    std::size_t n = I.front().nvars();
    for (int m = 1; m <= 4; ++m) {
      auto T = buchberger(truncate(G, m), DRL);
      for (unsigned d = 0; d <= 5; ++d) {
        std::size_t expect = static_cast<int>(d) >= m ? monomials_in(heads(G, DRL), n, d) : 0;
        EXPECT_EQ(monomials_in(T.heads(), n, d), expect);
      }
    }
  }
}

TEST(Membership, MembersAndEquality) {
  PQ f = q("x0^2 + x1*x2", 3);
  EXPECT_TRUE(ideal_member(f, {f}));
  EXPECT_FALSE(ideal_member(q("x0", 3), {f}));
  EXPECT_TRUE(ideal_equal(qideal({"x0 + x1", "x0 - x1"}, 2), qideal({"x0", "x1"}, 2)));
  EXPECT_FALSE(ideal_equal(qideal({"x0^2"}, 2), qideal({"x0"}, 2)));
}

TEST(Resultant, ClassicalDiscriminants) {
  // b^2 - 4ac with a = 1
  PolyRing<Q> r3(3, RationalField{});
  PQ f = parse_polynomial("x0^2 + b*x0 + c", r3, {"x0", "b", "c"});
  EXPECT_EQ(discriminant(f, 0), parse_polynomial("b^2 - 4*c", r3, {"x0", "b", "c"}));
  EXPECT_EQ(discriminant(q("x0^2 + x0*x3 - 3*x3^2", 4), 0), q("13*x3^2", 4));
  EXPECT_THROW(discriminant(q("x1", 2), 0), Error);
  // cubic x^3 + p x + q: -4p^3 - 27q^2
  PQ cub = parse_polynomial("x0^3 + b*x0 + c", r3, {"x0", "b", "c"});
  EXPECT_EQ(discriminant(cub, 0), parse_polynomial("-4*b^3 - 27*c^2", r3, {"x0", "b", "c"}));
}

TEST(Resultant, BareissMatchesCofactorExpansion) {
  std::mt19937 rng(12);
  PolyRing<Q> r2(2, RationalField{});
  for (int k = 0; k < 15; ++k) {
    std::size_t n = 2 + rng() % 3;
    std::vector<std::vector<PQ>> M(n, std::vector<PQ>(n, r2.zero()));
    for (auto& row : M)
      for (auto& e : row) {
        e = r2.from_integer(static_cast<long>(rng() % 5) - 2);
        if (rng() % 2) e += r2.monomial(Q(1), Monomial::variable(2, rng() % 2));
      }
    EXPECT_EQ(bareiss_determinant(M, r2), naive_det(M));
  }
}

TEST(Resultant, VanishesExactlyOnCommonFactors) {
  std::mt19937 rng(2);
  PolyRing<Q> r2(2, RationalField{});
  auto lin = [&] { return q("x0", 2) + r2.monomial(Q(static_cast<long>(rng() % 7) - 3), Monomial{0, 1}); };
  for (int k = 0; k < 10; ++k) {
    PQ a = lin(), b = lin(), c = lin();
    EXPECT_TRUE(resultant(a * b, b * c, 0).is_zero());
    PQ d = q("x0^2 + x1^2", 2);
    EXPECT_FALSE(resultant(a * b, d, 0).is_zero());
  }
}

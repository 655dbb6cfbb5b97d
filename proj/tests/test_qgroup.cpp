#include <gtest/gtest.h>

#include <random>

#include "pdg/qgroup.hpp"

using namespace pdg;

namespace {

const Ring G = Ring::generic();

Coef lc(const LaurentPoly& f, Ring r = G) { return Coef::from_laurent(f, r); }

CBWord random_word(std::mt19937& rng, long max_ab, long n) {
  std::uniform_int_distribution<long> ab(0, max_ab);
  return CBWord::basis(ab(rng), ab(rng), n);
}

// Base change of a generic element along the structure map of r.
UdotElem base_change(const UdotElem& x, Ring r) {
  UdotElem out(r);
  for (const auto& [w, c] : x.terms()) out.add_term(w, lc(c.laurent(), r));
  return out;
}

}  // namespace

TEST(CBWord, CanonicalForm) {
  EXPECT_TRUE(CBWord::basis(1, 1, 0).canonical());
  EXPECT_EQ(CBWord::basis(1, 1, 0).shape, Shape::EF);
  EXPECT_EQ(CBWord::basis(1, 1, 1).shape, Shape::FE);
  EXPECT_EQ(CBWord::basis(2, 1, -3).target(), -1);
  EXPECT_EQ(CBWord::basis(2, 0, 4).str(), "F(0)E(2)1[4]");
  EXPECT_EQ(canonical_words({1, 1}).size(), 12u);
}

TEST(Half, Examples) {
  HalfElem t1 = HalfElem::divided_power(G, 1);
  EXPECT_EQ(half_mult(HalfElem::divided_power(G, 0), t1), t1);
  HalfElem want(G);
  want.add_term(2, lc(qint(2)));
  EXPECT_EQ(half_mult(t1, t1), want);

  Ring o3 = Ring::op(3);
  HalfElem e6(o3);
  e6.add_term(6, Coef::from_laurent(LaurentPoly::monomial(3, 2), o3));
  EXPECT_EQ(half_mult(HalfElem::divided_power(o3, 3), HalfElem::divided_power(o3, 3)), e6);
}

TEST(Half, Comultiplication) {
  auto r0 = half_comult(HalfElem::divided_power(G, 0));
  ASSERT_EQ(r0.size(), 1u);
  EXPECT_EQ(r0.at({0, 0}), Coef(G, 1));
  auto r1 = half_comult(HalfElem::divided_power(G, 1));
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(r1.at({1, 0}), Coef(G, 1));
  EXPECT_EQ(r1.at({0, 1}), Coef(G, 1));
  // Counit on either side gives the element back.
  for (long a = 0; a <= 6; ++a) {
    auto r = half_comult(HalfElem::divided_power(G, a));
    EXPECT_EQ(r.at({a, 0}), Coef(G, 1));
    EXPECT_EQ(r.at({0, a}), Coef(G, 1));
  }
}

TEST(Half, ProductIsBinomial) {
  for (long a = 0; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b) {
      HalfElem want(G);
      want.add_term(a + b, lc(qbinom(a + b, a)));
      EXPECT_EQ(half_mult(HalfElem::divided_power(G, a), HalfElem::divided_power(G, b)), want);
    }
}

TEST(Half, Frobenius) {
  for (int p : {2, 3, 5}) {
    Ring o = Ring::op(p), r = Ring::rho(p);
    EXPECT_EQ(half_frobenius(HalfElem::divided_power(o, p)), HalfElem::divided_power(r, 1));
    EXPECT_TRUE(half_frobenius(HalfElem::divided_power(o, 1)).is_zero());
    EXPECT_EQ(half_frobenius(HalfElem::divided_power(o, 0)), HalfElem::divided_power(r, 0));
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        HalfElem x = HalfElem::divided_power(o, a * p), y = HalfElem::divided_power(o, b * p);
        EXPECT_EQ(half_frobenius(half_mult(x, y)), half_mult(half_frobenius(x), half_frobenius(y)));
      }
  }
}

TEST(Udot, IdempotentsAreOrthogonal) {
  for (long n = -3; n <= 3; ++n)
    for (long m = -3; m <= 3; ++m) {
      UdotElem prod = udot_mult(UdotElem::idem(G, n), UdotElem::idem(G, m));
      if (n == m)
        EXPECT_EQ(prod, UdotElem::idem(G, n));
      else
        EXPECT_TRUE(prod.is_zero());
    }
}

TEST(Udot, CommutatorIsQuantumInteger) {
  for (long n = -6; n <= 6; ++n) {
    UdotElem ef = udot_mult(UdotElem::E(G, 1, n - 2), UdotElem::F(G, 1, n));
    UdotElem fe = udot_mult(UdotElem::F(G, 1, n + 2), UdotElem::E(G, 1, n));
    EXPECT_EQ(ef - fe, UdotElem::idem(G, n).scaled(lc(qint(n)))) << n;
  }
}

TEST(Udot, NormalFormMatchesOracle) {
  EXPECT_TRUE(oracle_agrees(CBWord::basis(2, 0, -2), CBWord::basis(0, 2, 2)));
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> wt(-5, 5);
  for (int t = 0; t < 60; ++t) {
    CBWord y = random_word(rng, 3, wt(rng));
    CBWord x = random_word(rng, 3, y.target());
    std::string why;
    EXPECT_TRUE(oracle_agrees(x, y, &why)) << x.str() << " * " << y.str() << ": " << why;
  }
}

TEST(Udot, Associative) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> wt(-4, 4);
  for (int t = 0; t < 40; ++t) {
    CBWord z = random_word(rng, 2, wt(rng));
    CBWord y = random_word(rng, 2, z.target());
    CBWord x = random_word(rng, 2, y.target());
    UdotElem X(G), Y(G), Z(G);
    X.add_term(x, Coef(G, 1));
    Y.add_term(y, Coef(G, 1));
    Z.add_term(z, Coef(G, 1));
    EXPECT_EQ(udot_mult(udot_mult(X, Y), Z), udot_mult(X, udot_mult(Y, Z))) << x.str() << y.str() << z.str();
  }
}

TEST(Udot, BaseChangeCommutesWithProduct) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> wt(-4, 4);
  for (int p : {2, 3})
    for (Ring r : {Ring::op(p), Ring::rho(p)})
      for (int t = 0; t < 20; ++t) {
        CBWord y = random_word(rng, 3, wt(rng));
        CBWord x = random_word(rng, 3, y.target());
        UdotElem X(G), Y(G);
        X.add_term(x, Coef(G, 1));
        Y.add_term(y, Coef(G, 1));
        EXPECT_EQ(base_change(udot_mult(X, Y), r), udot_mult(base_change(X, r), base_change(Y, r)));
      }
}

TEST(Udot, NonCanonicalWordsNormalize) {
  // F E 1_0 = E F 1_0 - [0] 1_0 = E F 1_0
  EXPECT_EQ(UdotElem::word(G, Shape::FE, 1, 1, 0), UdotElem::word(G, Shape::EF, 1, 1, 0));
  // E F 1_2 = F E 1_2 + [2] 1_2
  UdotElem want = UdotElem::word(G, Shape::FE, 1, 1, 2) + UdotElem::idem(G, 2).scaled(lc(qint(2)));
  EXPECT_EQ(UdotElem::word(G, Shape::EF, 1, 1, 2), want);
}

TEST(Frobenius, Examples) {
  for (int p : {2, 3}) {
    Ring o = Ring::op(p), r = Ring::rho(p);
    EXPECT_EQ(frobenius(UdotElem::E(o, p, 2 * p)), UdotElem::E(r, 1, 2));
    EXPECT_TRUE(frobenius(UdotElem::E(o, p, 2 * p + 1)).is_zero());
    EXPECT_EQ(frobenius(UdotElem::word(o, Shape::FE, p, 2 * p, -3 * p)), UdotElem::word(r, Shape::FE, 1, 2, -3));
    EXPECT_TRUE(frobenius(UdotElem::E(o, 1, 0)).is_zero());
  }
}

TEST(Frobenius, HomomorphismOnSmallPairs) {
  UdotElem x = UdotElem::E(Ring::op(2), 2, 0), y = UdotElem::F(Ring::op(2), 2, 4);
  EXPECT_EQ(frobenius(udot_mult(x, y)), udot_mult(frobenius(x), frobenius(y)));
  EXPECT_TRUE(frobenius_hom_check(2, {2, 4}).ok);
  EXPECT_TRUE(kernel_check(2, {2, 4}).ok);
  EXPECT_TRUE(kernel_check(3, {0, 0}).ok);
}

TEST(Frobenius, SectionIsRightInverse) {
  for (int p : {2, 3, 5}) {
    Ring r = Ring::rho(p);
    for (const auto& w : canonical_words({3, 6})) {
      UdotElem x(r);
      x.add_term(w, Coef(r, 1));
      EXPECT_EQ(frobenius(frobenius_section(x)), x) << w.str();
    }
    EXPECT_TRUE(section_check(p, {3, 6}).ok);
  }
}

TEST(QGeneral, NegativeUpperIndex) {
  EXPECT_EQ(qbinom_general(-1, 1), -qint(1));
  EXPECT_EQ(qbinom_general(-2, 2), qbinom(3, 2));
  for (long m = 0; m <= 6; ++m)
    for (long j = 0; j <= m; ++j) EXPECT_EQ(qbinom_general(m, j), qbinom(m, j));
  EXPECT_TRUE(qbinom_general(2, 3).is_zero());
}

TEST(K0, Examples) {
  EXPECT_TRUE(k0_symbol_check(1, 1, 2));
  for (int b = 0; b <= 3; ++b) EXPECT_TRUE(k0_symbol_check(0, b, 3));
  EXPECT_TRUE(k0_symbol_check(1, 2, 3));
  K0Report r = k0_symbol_report(1, 1, 3);
  EXPECT_EQ(r.binomial, 2);
  EXPECT_EQ(r.slash_char, CycElem(3, 2));
  EXPECT_EQ(r.literal, CycElem::q_pow(3, 3) * 2);
  K0Report r2 = k0_symbol_report(1, 1, 2);
  EXPECT_EQ(r2.slash_char, CycElem(2, 2));
}

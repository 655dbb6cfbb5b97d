#include <gtest/gtest.h>

#include <random>

#include "pdg/poly.hpp"

using namespace pdg;

namespace {

PolElem random_pol(std::mt19937& rng, int n, fp_t p, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(1, static_cast<int>(p) - 1), count(1, 4);
  PolElem f(n, p);
  for (int i = count(rng); i > 0; --i) {
    auto ms = monomials(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    f.add_term(ms[pick(rng)], static_cast<fp_t>(coef(rng)));
  }
  return f;
}

}  // namespace

TEST(Pol, MonomialPacking) {
  MonoKey k = mono_set(mono_set(0, 0, 3), 2, 5);
  EXPECT_EQ(mono_exp(k, 0), 3);
  EXPECT_EQ(mono_exp(k, 1), 0);
  EXPECT_EQ(mono_exp(k, 2), 5);
  EXPECT_EQ(mono_total(k, 3), 8);
  EXPECT_EQ(monomials(3, 2).size(), 6u);
}

TEST(Pol, DiffIsDerivation) {
  std::mt19937 rng(1);
  for (fp_t p : {2u, 3u, 5u})
    for (int t = 0; t < 30; ++t) {
      PolElem f = random_pol(rng, 3, p, 3), g = random_pol(rng, 3, p, 3);
      EXPECT_EQ(pol_diff(f * g), pol_diff(f) * g + f * pol_diff(g));
    }
  PolElem x = PolElem::var(2, 3, 0);
  EXPECT_EQ(pol_diff(x), x * x);
}

TEST(Pol, DiffToThePIsZero) {
  std::mt19937 rng(8);
  for (fp_t p : {2u, 3u, 5u})
    for (int t = 0; t < 20; ++t) {
      PolElem f = random_pol(rng, 3, p, 3);
      for (fp_t i = 0; i < p; ++i) f = pol_diff(f);
      EXPECT_TRUE(f.is_zero());
    }
}

TEST(Demazure, Examples) {
  fp_t p = 5;
  PolElem x1 = PolElem::var(2, p, 0), x2 = PolElem::var(2, p, 1);
  EXPECT_EQ(demazure(1, x1), PolElem::constant(2, p, 1));
  EXPECT_EQ(demazure(1, x1 * x1), x1 + x2);
  EXPECT_TRUE(demazure(1, x1 * x2).is_zero());
}

TEST(Demazure, FastAgreesWithLongDivision) {
  std::mt19937 rng(3);
  for (fp_t p : {2u, 3u, 7u})
    for (int n : {2, 3, 4})
      for (int t = 0; t < 30; ++t) {
        PolElem f = random_pol(rng, n, p, 5);
        for (int i = 1; i < n; ++i) EXPECT_EQ(demazure(i, f), demazure_fast(i, f)) << f.str();
      }
}

TEST(Demazure, TwistedLeibniz) {
  // d_i(fg) = d_i(f) g + s_i(f) d_i(g)
  std::mt19937 rng(6);
  for (int t = 0; t < 30; ++t) {
    PolElem f = random_pol(rng, 3, 5, 3), g = random_pol(rng, 3, 5, 3);
    for (int i = 1; i < 3; ++i) EXPECT_EQ(demazure(i, f * g), demazure(i, f) * g + f.swapped(i - 1) * demazure(i, g));
  }
}

TEST(Operators, ComposeAndIdentity) {
  fp_t p = 3;
  auto x1 = OperatorOnWindow::from_function(2, p, 2, 8, [&](const PolElem& f) { return PolElem::var(2, p, 0) * f; });
  auto id = OperatorOnWindow::identity(2, p, 10);
  EXPECT_TRUE(compose(id, x1).equals(x1));
  EXPECT_THROW(x1.apply(PolElem::monomial(2, p, {5, 0})), std::out_of_range);
}

TEST(NilHecke, Relations) {
  EXPECT_TRUE(nilhecke_relations_check(1, 3, 10).ok);
  EXPECT_TRUE(nilhecke_relations_check(2, 3, 12).ok);
  EXPECT_TRUE(nilhecke_relations_check(3, 2, 12).ok);
  EXPECT_TRUE(nilhecke_relations_check(4, 5, 16).ok);
}

TEST(NilHecke, DifferentialOfGenerators) {
  fp_t p = 3;
  int w = 10;
  auto x1 = OperatorOnWindow::from_function(2, p, 2, w, [&](const PolElem& f) { return PolElem::var(2, p, 0) * f; });
  auto x1sq = OperatorOnWindow::from_function(2, p, 4, w - 2, [&](const PolElem& f) {
    PolElem x = PolElem::var(2, p, 0);
    return x * x * f;
  });
  EXPECT_TRUE(nh_differential(x1).equals(x1sq));
  EXPECT_TRUE(nh_differential(OperatorOnWindow::identity(2, p, w)).is_zero());

  auto d1 = OperatorOnWindow::from_function(2, p, -2, w, [](const PolElem& f) { return demazure(1, f); });
  auto comm = nh_differential(d1);
  for (int m = 0; 2 * m <= w - 2; ++m)
    for (MonoKey k : monomials(2, m)) {
      PolElem f(2, p);
      f.add_term(k, 1);
      EXPECT_EQ(comm.apply(f), pol_diff(demazure(1, f)) - demazure(1, pol_diff(f)));
    }
}

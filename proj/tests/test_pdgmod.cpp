#include <gtest/gtest.h>

#include <random>

#include "pdg/pdgmod.hpp"

using namespace pdg;

namespace {

// One-line notation of the permutation w with demazure operator
// d_{i_k} ... d_{i_1} for the word i_1 ... i_k.
std::vector<int> word_perm(const std::vector<int>& word, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
  for (int i : word)
    for (int& x : w) {
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
  return w;
}

// Reduced word by peeling off the smallest right descent first.
std::vector<int> greedy_word(std::vector<int> w) {
  std::vector<int> word;
  for (;;) {
    int found = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i) + 1]) {
        found = i;
        break;
      }
    if (found < 0) break;
    std::swap(w[static_cast<std::size_t>(found)], w[static_cast<std::size_t>(found) + 1]);
    word.push_back(found + 1);
  }
  return word;
}

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

PDGMatrix random_matrix(std::mt19937& rng, fp_t p, int N, int m, int max_size) {
  PDGMatrix t(p, N, m);
  std::uniform_int_distribution<int> sz(0, max_size), coef(0, static_cast<int>(p) - 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto ls = partitions(sz(rng), N);
      std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
      t.at(i, j) = SchurPoly::schur(p, N, ls[pick(rng)], coef(rng));
    }
  return t;
}

}  // namespace

TEST(Staircase, TwoReducedWordsAgree) {
  std::mt19937 rng(12);
  for (auto [c, d] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    int n = c + d;
    auto stair = staircase_word(c, d);
    auto w = word_perm(stair, n);
    auto alt = greedy_word(w);
    ASSERT_EQ(alt.size(), stair.size());
    ASSERT_EQ(word_perm(alt, n), w);
    if (c == 2 && d == 2) ASSERT_NE(alt, stair);
    for (fp_t p : {2u, 3u})
      for (int t = 0; t < 20; ++t) {
        PolElem f = random_pol(rng, n, p, 6);
        EXPECT_EQ(apply_word(stair, f), apply_word(alt, f)) << f.str();
      }
  }
}

TEST(Pushforward, MatchesDemazureOnSchurPolynomials) {
  fp_t p = 5;
  for (auto [c, d] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    int n = c + d;
    auto word = staircase_word(c, d);
    for (int sa = 0; sa <= 3; ++sa)
      for (const auto& alpha : partitions(sa, c))
        for (int sb = 0; sb <= 3; ++sb)
          for (const auto& beta : partitions(sb, d)) {
            PolElem f = schur_pol(alpha, n, p, 0, c) * schur_pol(beta, n, p, c, d);
            PolElem want = apply_word(word, f);
            auto pf = pushforward(alpha, c, beta, d);
            PolElem got(n, p);
            if (pf) got = schur_pol(pf->second, n, p, 0, n).scaled(pf->first);
            EXPECT_EQ(got, want) << to_string(alpha) << " " << to_string(beta) << " c=" << c << " d=" << d;
          }
  }
}

TEST(Grass, Examples) {
  GrassModule g = grass_module(1, 1, 2);
  EXPECT_EQ(g.basis, (std::vector<Partition>{{}, {1}}));
  EXPECT_EQ(g.generator_degree, -1);
  EXPECT_EQ(grass_graded_rank(g), (std::map<int, long>{{-1, 1}, {1, 1}}));
  EXPECT_EQ(grass_graded_rank(grass_module(1, 2, 3)), (std::map<int, long>{{-2, 1}, {0, 1}, {2, 1}}));
  EXPECT_THROW(grass_module(2, 2, 2, 2), std::invalid_argument);
}

TEST(Grass, DiffMatrixRaisesByOneBox) {
  for (fp_t p : {2u, 3u})
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
      GrassModule g = grass_module(a, b, p);
      int m = static_cast<int>(g.basis.size());
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (const auto& [nu, c] : g.diff_matrix.at(i, j).terms())
            EXPECT_EQ(g.degree[static_cast<std::size_t>(i)] + 2 * size(nu), g.degree[static_cast<std::size_t>(j)] + 2);
    }
}

TEST(Grass, PairingIsPerfect) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      std::string why;
      EXPECT_TRUE(pairing_check(a, b, &why)) << a << " " << b << " " << why;
    }
}

TEST(EndAlgebra, DifferentialIsDerivation) {
  std::mt19937 rng(7);
  for (fp_t p : {2u, 3u}) {
    EndAlgebra alg = end_algebra(1, 2, p);
    for (int t = 0; t < 10; ++t) {
      PDGMatrix s = random_matrix(rng, p, alg.N, alg.size(), 2), u = random_matrix(rng, p, alg.N, alg.size(), 2);
      EXPECT_EQ(alg.diff(s * u), alg.diff(s) * u + s * alg.diff(u));
      PDGMatrix h = s;
      for (fp_t i = 0; i < p; ++i) h = alg.diff(h);
      EXPECT_TRUE(h.is_zero());
    }
  }
}

TEST(EndAlgebra, FactoredSlashDimsMatchDirect) {
  fp_t p = 2;
  EndAlgebra alg = end_algebra(1, 1, p);
  int cap = 16;
  auto factored = end_slash_dims(alg, cap);
  EndComplex ec = end_complex(alg, cap - 4);
  auto direct = slash_dims(ec.cx);
  for (std::size_t k = 0; k < direct.size(); ++k)
    for (int d = -4; d <= cap - 8; d += 2) {
      if (!direct[k].in_window(d) || !factored[k].in_window(d)) continue;
      EXPECT_EQ(direct[k].at(d), factored[k].at(d)) << "k=" << k << " d=" << d;
    }
}

TEST(ThickCrossing, SquaresToZero) {
  for (fp_t p : {2u, 3u}) {
    PDGMatrix x = thick_crossing(1, 1, p);
    EXPECT_FALSE(x.is_zero());
    EXPECT_TRUE((x * x).is_zero());
  }
}

TEST(ThetaPlus, DotIsSquareOfElementary) {
  ThickContext ctx = thick_context(2, 2);
  PDGMatrix dot = theta_plus(NHGen::Dot, 1, ctx);
  PDGMatrix want = operator_matrix(ctx.tower, [](const BlockSym& f) { return mult_block(f, 0, {2, 2}); });
  EXPECT_EQ(dot, want);
}

TEST(ThickNilHecke, SingleStrand) {
  for (fp_t p : {2u, 3u}) EXPECT_TRUE(thick_nilhecke_check(1, p, 24).ok());
}

TEST(NilHeckeAcyclic, TwistedAcyclicUntwistedNot) {
  EXPECT_TRUE(nh_acyclicity_check(2, 24, true).ok);
  EXPECT_TRUE(nh_acyclicity_check(3, 24, true).ok);
  EXPECT_FALSE(nh_acyclicity_check(2, 24, false).ok);
}

TEST(Formality, SmallCases) {
  EXPECT_TRUE(formality_check(1, 1, 2, 32).ok);
  EXPECT_TRUE(formality_check(1, 0, 3, 40).ok);
}

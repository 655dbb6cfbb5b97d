#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "pdg/symfunc.hpp"

using namespace pdg;

namespace {

// Monomial expansion in n variables, coefficients mod p.
using Mono = std::map<std::vector<int>, long>;

void add_mono(Mono& m, const std::vector<int>& e, long c, long p) {
  long& x = m[e];
  x = ((x + c) % p + p) % p;
  if (x == 0) m.erase(e);
}

// Schur polynomial from semistandard tableaux, filled box by box.
Mono schur_monomials(const Partition& l, int n, long p) {
  Mono out;
  if (static_cast<int>(l.size()) > n) return out;
  std::vector<std::vector<int>> t;
  for (int r : l) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<std::pair<int, int>> boxes;
  for (std::size_t r = 0; r < l.size(); ++r)
    for (int c = 0; c < l[r]; ++c) boxes.emplace_back(static_cast<int>(r), c);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == boxes.size()) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (const auto& row : t)
        for (int x : row) ++e[static_cast<std::size_t>(x)];
      add_mono(out, e, 1, p);
      return;
    }
    auto [r, c] = boxes[i];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x < n; ++x) {
      t[r][c] = x;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

Mono expand(const SchurPoly& f, int n) {
  Mono out;
  for (const auto& [l, c] : f.terms())
    for (const auto& [e, k] : schur_monomials(l, n, f.p())) add_mono(out, e, k * c, f.p());
  return out;
}

Mono mono_mult(const Mono& a, const Mono& b, long p) {
  Mono out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_mono(out, e, ca * cb % p, p);
    }
  return out;
}

// d(x_i) = x_i^2 as a derivation, plus a * e_1 * f.
Mono mono_diff(const Mono& f, long a, long p) {
  Mono out;
  for (const auto& [e, c] : f)
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::vector<int> g = e;
      g[i] += 1;
      add_mono(out, g, c * (e[i] + a), p);
    }
  return out;
}

SchurPoly s(fp_t p, std::optional<int> n, const Partition& l, long c = 1) { return SchurPoly::schur(p, n, l, c); }

SchurPoly random_schur(std::mt19937& rng, fp_t p, int n, int max_size) {
  std::uniform_int_distribution<int> sz(0, max_size), coef(1, static_cast<int>(p) - 1), count(1, 3);
  SchurPoly f(p, n);
  for (int i = count(rng); i > 0; --i) {
    auto ls = partitions(sz(rng), n);
    if (ls.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
    f.add_term(ls[pick(rng)], coef(rng));
  }
  return f;
}

}  // namespace

TEST(Partitions, Basics) {
  EXPECT_EQ(transpose({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(4, 2).size(), 3u);
  EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
  // Lexicographically decreasing within a size.
  EXPECT_EQ(partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
  EXPECT_EQ(complement_transpose({2}, 2, 2), (Partition{1, 1}));
  for (const auto& l : partitions_in_box(3, 2)) EXPECT_TRUE(fits_in(complement_transpose(l, 3, 2), 2, 3));
}

TEST(Partitions, Lima) {
  EXPECT_EQ(lima_partitions(1, 0, 2), (std::vector<Partition>{{}}));
  EXPECT_EQ(lima_partitions(1, 1, 2), (std::vector<Partition>{{}, {2, 2}}));
  EXPECT_EQ(lima_expand({1}, 3), (Partition{3, 3, 3}));
  // (6,6,6,3,3,3) is the expansion of (2,1) at p = 3, inside a 6 x 6 box.
  auto lp = lima_partitions(2, 2, 3);
  EXPECT_NE(std::find(lp.begin(), lp.end(), Partition{6, 6, 6, 3, 3, 3}), lp.end());
  auto small = lima_partitions(2, 1, 3);
  EXPECT_EQ(std::find(small.begin(), small.end(), Partition{6, 6, 6, 3, 3, 3}), small.end());
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) EXPECT_EQ(lima_partitions(b, a, 2).size(), partitions_in_box(b, a).size());
}

TEST(SchurPoly, MultExamples) {
  fp_t p = 3;
  EXPECT_EQ(mult(SchurPoly::one(p, 4), s(p, 4, {2, 1})), s(p, 4, {2, 1}));
  EXPECT_EQ(mult(s(p, 2, {1}), s(p, 2, {1})), s(p, 2, {2}) + s(p, 2, {1, 1}));
  EXPECT_EQ(mult(s(p, 1, {1}), s(p, 1, {1})), s(p, 1, {2}));
}

TEST(SchurPoly, ElementaryAndComplete) {
  fp_t p = 5;
  EXPECT_EQ(elementary(0, p, 3), SchurPoly::one(p, 3));
  EXPECT_TRUE(elementary(3, p, 2).is_zero());
  for (int n : {1, 2, 4}) EXPECT_EQ(complete(2, p, n), s(p, n, {2}));
}

TEST(SchurPoly, ProductMatchesMonomialExpansion) {
  std::mt19937 rng(11);
  for (fp_t p : {2u, 3u, 5u})
    for (int n : {1, 2, 3})
      for (int t = 0; t < 25; ++t) {
        SchurPoly f = random_schur(rng, p, n, 4), g = random_schur(rng, p, n, 3);
        EXPECT_EQ(expand(mult(f, g), n), mono_mult(expand(f, n), expand(g, n), p)) << f.str() << " * " << g.str();
      }
}

TEST(SchurPoly, Pieri) {
  fp_t p = 7;
  // h_1 s_{(2,1)} adds one box anywhere.
  EXPECT_EQ(mult(complete(1, p, std::nullopt), s(p, std::nullopt, {2, 1})),
            s(p, std::nullopt, {3, 1}) + s(p, std::nullopt, {2, 2}) + s(p, std::nullopt, {2, 1, 1}));
  // e_2 s_{(1)} adds a vertical strip of two boxes.
  EXPECT_EQ(mult(elementary(2, p, std::nullopt), s(p, std::nullopt, {1})),
            s(p, std::nullopt, {2, 1}) + s(p, std::nullopt, {1, 1, 1}));
}

TEST(SchurPoly, JacobiTrudi) {
  fp_t p = 5;
  auto h = [&](int r) { return complete(r, p, std::nullopt); };
  // s_{(2,1)} = h_2 h_1 - h_3
  EXPECT_EQ(mult(h(2), h(1)) - h(3), s(p, std::nullopt, {2, 1}));
  // s_{(2,2)} = h_2 h_2 - h_3 h_1
  EXPECT_EQ(mult(h(2), h(2)) - mult(h(3), h(1)), s(p, std::nullopt, {2, 2}));
  // dual: s_{(2,1)} = e_2 e_1 - e_3 transposed
  auto e = [&](int r) { return elementary(r, p, std::nullopt); };
  EXPECT_EQ(mult(e(2), e(1)) - e(3), s(p, std::nullopt, {2, 1}));
}

TEST(SchurPoly, ParseRoundTrip) {
  fp_t p = 5;
  SchurPoly f = s(p, 3, {2, 1}, 3) + s(p, 3, {}, 1) + s(p, 3, {1, 1, 1}, 4);
  EXPECT_EQ(SchurPoly::parse(f.str(), p, 3), f);
}

TEST(Diff, Examples) {
  fp_t p = 3;
  EXPECT_EQ(diff(s(p, 2, {1})), s(p, 2, {2}) - s(p, 2, {1, 1}));
  EXPECT_EQ(twisted_diff(s(p, 3, {2}), 0), diff(s(p, 3, {2})));
  EXPECT_EQ(twisted_diff(SchurPoly::one(p, 3), 2), s(p, 3, {1}, 2));
}

TEST(Diff, MatchesDerivationOnMonomials) {
  std::mt19937 rng(2);
  for (fp_t p : {2u, 3u, 5u})
    for (int n : {1, 2, 3})
      for (long a = 0; a < static_cast<long>(p); ++a)
        for (int t = 0; t < 10; ++t) {
          SchurPoly f = random_schur(rng, p, n, 4);
          EXPECT_EQ(expand(twisted_diff(f, a), n), mono_diff(expand(f, n), a, p)) << f.str() << " a=" << a;
        }
}

TEST(Diff, LeibnizAndNilpotence) {
  std::mt19937 rng(4);
  for (fp_t p : {2u, 3u, 5u})
    for (int t = 0; t < 20; ++t) {
      SchurPoly f = random_schur(rng, p, 3, 3), g = random_schur(rng, p, 3, 3);
      EXPECT_EQ(diff(mult(f, g)), mult(diff(f), g) + mult(f, diff(g)));
      SchurPoly h = f;
      for (fp_t i = 0; i < p; ++i) h = diff(h);
      EXPECT_TRUE(h.is_zero());
    }
}

TEST(Omega, Examples) {
  fp_t p = 5;
  EXPECT_EQ(omega(elementary(2, p, std::nullopt)), complete(2, p, std::nullopt));
  EXPECT_EQ(omega(s(p, std::nullopt, {3, 1})), s(p, std::nullopt, {2, 1, 1}));
  SchurPoly f = s(p, std::nullopt, {2, 1}, 2) + s(p, std::nullopt, {4}, 3);
  EXPECT_EQ(omega(omega(f)), f);
}

TEST(SplitVars, Examples) {
  fp_t p = 3;
  SchurTensor want{{{{1}, {}}, 1}, {{{}, {1}}, 1}};
  EXPECT_EQ(split_vars(elementary(1, p, 2), 1, 1), want);
  // s_{(1,1)} in two variables is x_1 x_2.
  SchurTensor e2{{{{1}, {1}}, 1}};
  EXPECT_EQ(split_vars(s(p, 2, {1, 1}), 1, 1), e2);
}

TEST(Theta0, Examples) {
  EXPECT_EQ(theta0({{{0}, 1}}, 2, std::nullopt), SchurPoly::one(2, std::nullopt));
  EXPECT_EQ(theta0({{{1}, 1}}, 2, std::nullopt),
            s(2, std::nullopt, {2, 2}) + s(2, std::nullopt, {2, 1, 1}) + s(2, std::nullopt, {1, 1, 1, 1}));
}

TEST(AsPComplex, Examples) {
  SymParams v11;
  v11.a = 1;
  v11.b = 1;
  auto c = as_pcomplex(SymSource::Vab, 2, v11, std::nullopt);
  EXPECT_EQ(c.cx.total_dim(), 6);
  auto h = slash_cohomology(c.cx);
  ASSERT_EQ(h.dims.size(), 1u);
  EXPECT_EQ(h.dims[0].at(0), 1);
  EXPECT_EQ(h.dims[0].at(8), 1);
  EXPECT_EQ(hilbert(h).dims, (std::map<int, long>{{0, 1}, {8, 1}}));

  SymParams vi;
  vi.i = 1;
  vi.k = 1;
  auto v1 = as_pcomplex(SymSource::Vi, 3, vi, std::nullopt);
  EXPECT_EQ(v1.cx.total_dim(), 3);
  for (const auto& g : slash_dims(v1.cx))
    for (auto [d, n] : g.dims) EXPECT_EQ(n, 0) << d;
}

TEST(AsPComplex, SymHilbert) {
  SymParams prm;
  prm.n = 2;
  auto c = as_pcomplex(SymSource::Sym, 3, prm, 8);
  GradedDims h = hilbert(c.cx);
  EXPECT_EQ(h.dims, (std::map<int, long>{{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 3}}));
}

TEST(AsPComplex, SymOfPVariablesIsFormal) {
  for (fp_t p : {2u, 3u}) {
    SymParams prm;
    prm.n = static_cast<int>(p);
    int cap = p == 2 ? 32 : 36;
    auto c = as_pcomplex(SymSource::Sym, p, prm, cap);
    auto h = slash_dims(c.cx);
    for (std::size_t k = 1; k < h.size(); ++k)
      for (auto [d, n] : h[k].dims)
        if (h[k].in_window(d)) EXPECT_EQ(n, 0);
    const auto& h0 = h[0];
    for (int d = 0; d <= cap; d += 2) {
      if (!h0.in_window(d)) continue;
      long want = d % static_cast<int>(2 * p * p) == 0 ? 1 : 0;
      EXPECT_EQ(h0.at(d), want) << "p=" << p << " d=" << d;
    }
  }
}

TEST(AsPComplex, RejectsEmptyWindow) {
  SymParams prm;
  prm.n = 3;
  EXPECT_THROW(as_pcomplex(SymSource::Sym, 5, prm, 2), std::invalid_argument);
}

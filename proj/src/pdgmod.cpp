#include "pdg/pdgmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdg {

PDGMatrix::PDGMatrix(fp_t p, int N, int m) : p_(p), N_(N), m_(m), e_(static_cast<std::size_t>(m) * m, SchurPoly(p, N)) {}

PDGMatrix PDGMatrix::identity(fp_t p, int N, int m) {
  PDGMatrix r(p, N, m);
  for (int i = 0; i < m; ++i) r.at(i, i) = SchurPoly::one(p, N);
  return r;
}

PDGMatrix PDGMatrix::elementary(fp_t p, int N, int m, int i, int j) {
  PDGMatrix r(p, N, m);
  r.at(i, j) = SchurPoly::one(p, N);
  return r;
}

void PDGMatrix::check(const PDGMatrix& o) const {
  if (o.m_ != m_ || o.p_ != p_ || o.N_ != N_) throw std::invalid_argument("PDGMatrix: shape mismatch");
}

bool PDGMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool PDGMatrix::is_constant() const {
  for (const auto& x : e_)
    for (const auto& [l, c] : x.terms())
      if (!l.empty()) return false;
  return true;
}

PDGMatrix PDGMatrix::operator+(const PDGMatrix& o) const {
  check(o);
  PDGMatrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

PDGMatrix PDGMatrix::operator-(const PDGMatrix& o) const {
  check(o);
  PDGMatrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

namespace {
// Constant entries are common; skip the LR machinery for them.
SchurPoly times(const SchurPoly& f, const SchurPoly& g) {
  if (f.terms().size() == 1 && f.terms().begin()->first.empty()) return g.scaled(f.terms().begin()->second);
  if (g.terms().size() == 1 && g.terms().begin()->first.empty()) return f.scaled(g.terms().begin()->second);
  return mult(f, g);
}
}  // namespace

PDGMatrix PDGMatrix::operator*(const PDGMatrix& o) const {
  check(o);
  PDGMatrix r(p_, N_, m_);
  for (int i = 0; i < m_; ++i)
    for (int k = 0; k < m_; ++k) {
      const SchurPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < m_; ++j) {
        const SchurPoly& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += times(a, b);
      }
    }
  return r;
}

PDGMatrix PDGMatrix::scaled(long c) const {
  PDGMatrix r = *this;
  for (auto& x : r.e_) x = x.scaled(c);
  return r;
}

PDGMatrix PDGMatrix::truncated(int cap) const {
  PDGMatrix r = *this;
  for (auto& x : r.e_) x = x.truncated(cap);
  return r;
}

std::string PDGMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (!at(i, j).is_zero()) os << i << " " << j << " " << at(i, j).str() << "\n";
  return os.str();
}

PDGMatrix EndAlgebra::diff(const PDGMatrix& t) const {
  PDGMatrix r(p, N, size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (!t.at(i, j).is_zero()) r.at(i, j) = pdg::diff(t.at(i, j));
  r = r + D * t - t * D;
  return cap ? r.truncated(*cap) : r;
}

std::optional<int> EndAlgebra::homogeneous_degree(const PDGMatrix& t) const {
  std::optional<int> deg;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (const auto& [l, c] : t.at(i, j).terms()) {
        int d = 2 * pdg::size(l) + degree[i] - degree[j];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
      }
  return deg;
}

PDGMatrix operator_matrix(const Tower& t, const std::function<BlockSym(const BlockSym&)>& op) {
  int m = static_cast<int>(t.basis.size());
  PDGMatrix r(t.p, t.N, m);
  for (int j = 0; j < m; ++j) {
    auto coeffs = t.decompose(op(t.element(j)));
    for (int i = 0; i < m; ++i) r.at(i, j) = std::move(coeffs[i]);
  }
  return r;
}

EndAlgebra tower_end_algebra(const Tower& t, const std::vector<long>& twist, const std::string& label) {
  EndAlgebra alg;
  alg.p = t.p;
  alg.N = t.N;
  alg.degree = t.degree;
  alg.D = operator_matrix(t, [&](const BlockSym& f) { return block_diff(f, twist); });
  alg.label = label;
  return alg;
}

GrassModule grass_module(int a, int b, fp_t p, std::optional<int> cap) {
  if (a < 0 || b < 0) throw std::invalid_argument("grass_module: a, b >= 0");
  GrassModule g;
  g.a = a;
  g.b = b;
  g.p = p;
  g.generator_degree = -a * b;
  if (cap && *cap < 2 * a * b) throw std::invalid_argument("grass_module: window smaller than the top basis degree");
  Tower t = make_tower(p, {a, b});
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    g.basis.push_back(t.basis[i][0]);
    g.degree.push_back(t.degree[i] - a * b);
  }
  g.diff_matrix = operator_matrix(t, [&](const BlockSym& f) { return block_diff(f, {0, -static_cast<long>(a)}); });
  return g;
}

std::map<int, long> grass_graded_rank(const GrassModule& g) {
  std::map<int, long> r;
  for (int d : g.degree) r[d] += 1;
  return r;
}

EndAlgebra end_algebra(int a, int b, fp_t p, std::optional<int> cap) {
  long m = 1;
  for (int i = 1; i <= b; ++i) {
    m = m * (a + i) / i;
    if (m > 400) throw std::invalid_argument("end_algebra: matrix size exceeds 400");
  }
  GrassModule g = grass_module(a, b, p);
  EndAlgebra alg;
  alg.p = p;
  alg.N = a + b;
  alg.degree = g.degree;
  alg.D = g.diff_matrix;
  alg.cap = cap;
  alg.label = "END(S_{" + std::to_string(a) + "," + std::to_string(b) + "})";
  return alg;
}

long pairing(const Partition& l, const Partition& m, int a, int b) {
  if (size(l) + size(m) != a * b) throw std::invalid_argument("pairing: need |l| + |m| = ab");
  auto pf = pushforward(l, a, m, b);
  if (!pf) return 0;
  if (!pf->second.empty()) throw std::logic_error("pairing: pushforward of a degree-zero product is not scalar");
  return pf->first;
}

bool pairing_check(int a, int b, std::string* why) {
  for (const auto& l : partitions_in_box(a, b))
    for (const auto& m : partitions(a * b - size(l), b, a)) {
      long got = pairing(l, m, a, b);
      long want = (m == complement_transpose(l, a, b)) ? kPairingSign * (size(m) % 2 ? -1 : 1) : 0;
      if (got != want) {
        if (why) *why = "pairing(" + to_string(l) + "," + to_string(m) + ") = " + std::to_string(got);
        return false;
      }
    }
  return true;
}

std::vector<int> staircase_word(int c, int d, int first) {
  std::vector<int> w;
  for (int t = 0; t < c; ++t)
    for (int u = 0; u < d; ++u) w.push_back(first - 1 + c - t + u);
  return w;
}

PolElem apply_word(const std::vector<int>& word, const PolElem& f) {
  PolElem g = f;
  for (int i : word) g = demazure(i, g);
  return g;
}

namespace {
void schur_rec(const Partition& l, int k, int n, fp_t p, int first, MonoKey acc, std::vector<MonoKey>& out) {
  if (l.empty()) {
    out.push_back(acc);
    return;
  }
  if (k == 0) return;
  if (static_cast<int>(l.size()) > k) return;
  // Remove a horizontal strip filled with variable k.
  std::vector<int> lo(l.size());
  for (std::size_t r = 0; r < l.size(); ++r) lo[r] = r + 1 < l.size() ? l[r + 1] : 0;
  Partition mu(l.size());
  std::function<void(std::size_t, int)> go = [&](std::size_t r, int removed) {
    if (r == l.size()) {
      Partition m;
      for (int x : mu)
        if (x > 0) m.push_back(x);
      int var = first + k - 1;
      schur_rec(m, k - 1, n, p, first, mono_set(acc, var, mono_exp(acc, var) + removed), out);
      return;
    }
    for (int x = lo[r]; x <= l[r]; ++x) {
      mu[r] = x;
      go(r + 1, removed + l[r] - x);
    }
  };
  go(0, 0);
}
}  // namespace

PolElem schur_pol(const Partition& l, int n, fp_t p, int first, int count) {
  PolElem f(n, p);
  std::vector<MonoKey> monos;
  schur_rec(l, count, n, p, first, 0, monos);
  for (MonoKey k : monos) f.add_term(k, 1);
  return f;
}

PDGMatrix thick_crossing(int a, int b, fp_t p) {
  Tower t = make_tower(p, {a, b});
  return operator_matrix(t, [](const BlockSym& f) { return block_crossing(f, 0); });
}

ThickContext thick_context(int a, fp_t p) {
  if (a < 1) throw std::invalid_argument("thick_context: a >= 1");
  if (a * static_cast<int>(p) > 6) throw std::invalid_argument("thick_context: a*p must be at most 6");
  ThickContext ctx;
  ctx.a = a;
  ctx.p = p;
  ctx.tower = make_tower(p, std::vector<int>(a, static_cast<int>(p)));
  ctx.alg = tower_end_algebra(ctx.tower, std::vector<long>(a, 0), "END(S_(p^" + std::to_string(a) + "))");
  return ctx;
}

PDGMatrix theta_plus(NHGen g, int k, const ThickContext& ctx) {
  int pp = static_cast<int>(ctx.p);
  if (g == NHGen::Dot) {
    if (k < 1 || k > ctx.a) throw std::invalid_argument("theta_plus: dot index out of range");
    Partition box(pp, pp);
    return operator_matrix(ctx.tower, [&](const BlockSym& f) { return mult_block(f, k - 1, box); });
  }
  if (k < 1 || k >= ctx.a) throw std::invalid_argument("theta_plus: crossing index out of range");
  return operator_matrix(ctx.tower, [&](const BlockSym& f) { return block_crossing(f, k - 1); });
}

PComplex module_complex(const EndAlgebra& alg) {
  if (!alg.D.is_constant()) throw std::invalid_argument("module_complex: differential is not constant");
  PComplex v(alg.p);
  std::map<int, std::vector<int>> by_deg;
  for (int i = 0; i < alg.size(); ++i) by_deg[alg.degree[i]].push_back(i);
  std::vector<int> pos(alg.size());
  for (const auto& [d, idx] : by_deg) {
    v.set_dim(d, static_cast<int>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
  }
  for (const auto& [d, src] : by_deg) {
    auto it = by_deg.find(d + 2);
    SparseMat m(it == by_deg.end() ? 0 : static_cast<int>(it->second.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int j = src[c];
      for (int i = 0; i < alg.size(); ++i) {
        fp_t x = alg.D.at(i, j).coeff({});
        if (!x) continue;
        if (alg.degree[i] != d + 2) throw std::logic_error("module_complex: differential is not of degree 2");
        m.col[c].emplace_back(pos[i], x);
      }
      std::sort(m.col[c].begin(), m.col[c].end());
    }
    if (it != by_deg.end()) v.set_diff(d, std::move(m));
  }
  return v;
}

int EndComplex::index_of(int i, int j, const Partition& nu) const {
  int s = degree[i] - degree[j] + 2 * size(nu);
  auto it = offsets.find(s);
  if (it == offsets.end()) return -1;
  auto jt = it->second.find({i, j});
  if (jt == it->second.end()) return -1;
  auto parts = partitions(size(nu), N);
  auto pos = std::lower_bound(parts.begin(), parts.end(), nu, PartitionOrder());
  if (pos == parts.end() || *pos != nu) return -1;
  return jt->second + static_cast<int>(pos - parts.begin());
}

DenseVec EndComplex::vector_of(const PDGMatrix& t, int deg) const {
  DenseVec v(cx.dim(deg), 0);
  int m = static_cast<int>(degree.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& [l, c] : t.at(i, j).terms()) {
        if (degree[i] - degree[j] + 2 * size(l) != deg)
          throw std::invalid_argument("EndComplex::vector_of: matrix is not homogeneous of this degree");
        int k = index_of(i, j, l);
        if (k < 0) throw std::invalid_argument("EndComplex::vector_of: entry outside the window");
        v[k] = c;
      }
  return v;
}

EndComplex end_complex(const EndAlgebra& alg, int hi) {
  EndComplex ec;
  ec.degree = alg.degree;
  ec.N = alg.N;
  ec.cx = PComplex(alg.p);
  ec.cx.hi = hi;
  int m = alg.size();
  fp_t p = alg.p;
  int dmin = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) dmin = std::min(dmin, alg.degree[i] - alg.degree[j]);
  std::map<int, std::vector<Partition>> parts;
  auto parts_of = [&](int k) -> const std::vector<Partition>& {
    auto it = parts.find(k);
    if (it == parts.end()) it = parts.emplace(k, partitions(k, alg.N)).first;
    return it->second;
  };
  for (int s = dmin; s <= hi; s += 2) {
    int off = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int r = s - alg.degree[i] + alg.degree[j];
        if (r < 0 || r % 2) continue;
        const auto& ps = parts_of(r / 2);
        if (ps.empty()) continue;
        ec.offsets[s][{i, j}] = off;
        off += static_cast<int>(ps.size());
      }
    if (off) ec.cx.set_dim(s, off);
  }
  auto index = [&](int s, int i, int j, const Partition& nu) {
    const auto& off = ec.offsets.at(s).at({i, j});
    const auto& ps = parts_of(size(nu));
    auto pos = std::lower_bound(ps.begin(), ps.end(), nu, PartitionOrder());
    return off + static_cast<int>(pos - ps.begin());
  };
  // Nonzero entries of D by column and by row.
  std::vector<std::vector<int>> dcol(m), drow(m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      if (!alg.D.at(k, i).is_zero()) {
        dcol[i].push_back(k);
        drow[k].push_back(i);
      }
  for (const auto& [s, offs] : ec.offsets) {
    if (s + 2 > hi || !ec.offsets.count(s + 2)) continue;
    SparseMat mat(ec.cx.dim(s + 2), ec.cx.dim(s));
    for (const auto& [ij, off] : offs) {
      auto [i, j] = ij;
      const auto& ps = parts_of((s - alg.degree[i] + alg.degree[j]) / 2);
      for (std::size_t c = 0; c < ps.size(); ++c) {
        std::map<int, fp_t> acc;
        auto add = [&](int idx, fp_t x) {
          fp_t& slot = acc[idx];
          slot = fp_add(slot, x, p);
        };
        SchurPoly nu = SchurPoly::schur(p, alg.N, ps[c]);
        SchurPoly dnu = diff(nu);
        for (const auto& [l, x] : dnu.terms()) add(index(s + 2, i, j, l), x);
        for (int k : dcol[i]) {
          SchurPoly left = times(alg.D.at(k, i), nu);
          for (const auto& [l, x] : left.terms()) add(index(s + 2, k, j, l), x);
        }
        for (int k : drow[j]) {
          SchurPoly right = times(nu, alg.D.at(j, k));
          for (const auto& [l, x] : right.terms()) add(index(s + 2, i, k, l), fp_neg(x, p));
        }
        SparseVec col;
        for (auto [idx, x] : acc)
          if (x) col.emplace_back(idx, x);
        mat.col[off + c] = std::move(col);
      }
    }
    ec.cx.set_diff(s, std::move(mat));
  }
  return ec;
}

std::vector<GradedDims> end_slash_dims(const EndAlgebra& alg, int sym_cap) {
  PComplex v = module_complex(alg);
  PComplex w = tensor(v, dual(v));
  SymParams prm;
  prm.n = alg.N;
  PComplex sym = as_pcomplex(SymSource::Sym, alg.p, prm, sym_cap).cx;
  return slash_dims_tensor(sym, w);
}

GradedDims matrix_series(const std::vector<int>& basis_degrees, int count, int step, int lo, int hi) {
  GradedDims g;
  g.lo = lo;
  g.hi = hi;
  std::map<int, long> num;
  for (int a : basis_degrees)
    for (int b : basis_degrees) num[a - b] += 1;
  int top = hi - (num.empty() ? 0 : num.begin()->first);
  // Coefficients of prod_j 1/(1 - t^{step j}) up to degree top.
  std::vector<long> den(std::max(0, top) + 1, 0);
  if (!den.empty()) den[0] = 1;
  for (int j = 1; j <= count; ++j) {
    int e = step * j;
    for (int d = e; d <= top; ++d) den[d] += den[d - e];
  }
  for (const auto& [a, c] : num)
    for (int d = 0; d <= top; ++d) {
      if (!den[d]) continue;
      int deg = a + d;
      if (deg < lo || deg > hi) continue;
      g.add(deg, c * den[d]);
    }
  return g;
}

bool ThickReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {
std::vector<int> scaled_coinvariant_degrees(int a, int scale) {
  Tower t = make_tower(2, std::vector<int>(a, 1));
  std::vector<int> out;
  for (int d : t.degree) out.push_back(d * scale);
  return out;
}

// Compare H_{/0} with the expected series and require H_{/k} = 0 for k >= 1,
// on [lo, hi] intersected with the valid windows.
bool compare_slash(const std::vector<GradedDims>& got, const GradedDims& want, int lo, int hi, std::string* why) {
  if (!dims_agree(got[0], want, lo, hi, why)) return false;
  for (std::size_t k = 1; k < got.size(); ++k)
    for (auto [d, n] : got[k].dims)
      if (n != 0 && d >= lo && d <= hi) {
        if (why) *why = "H_/" + std::to_string(k) + " nonzero in degree " + std::to_string(d);
        return false;
      }
  return true;
}
}  // namespace

ThickReport thick_nilhecke_check(int a, fp_t p, int sym_cap) {
  ThickReport rep;
  rep.a = a;
  rep.p = p;
  rep.sym_cap = sym_cap;
  ThickContext ctx = thick_context(a, p);
  const EndAlgebra& alg = ctx.alg;
  int m = alg.size();
  PDGMatrix id = PDGMatrix::identity(p, alg.N, m);
  std::vector<PDGMatrix> dots, crossings;
  for (int k = 1; k <= a; ++k) dots.push_back(theta_plus(NHGen::Dot, k, ctx));
  for (int k = 1; k < a; ++k) crossings.push_back(theta_plus(NHGen::Crossing, k, ctx));

  SubCheck cocycles{"generators are cocycles", true, ""};
  for (std::size_t k = 0; k < dots.size() && cocycles.ok; ++k)
    if (!alg.diff(dots[k]).is_zero()) cocycles = {cocycles.name, false, "d(dot_" + std::to_string(k + 1) + ") != 0"};
  for (std::size_t k = 0; k < crossings.size() && cocycles.ok; ++k)
    if (!alg.diff(crossings[k]).is_zero())
      cocycles = {cocycles.name, false, "d(crossing_" + std::to_string(k + 1) + ") != 0"};
  rep.checks.push_back(cocycles);

  SubCheck sq{"crossing^2 = 0", true, ""};
  for (std::size_t k = 0; k < crossings.size() && sq.ok; ++k)
    if (!(crossings[k] * crossings[k]).is_zero()) sq = {sq.name, false, "fails at k = " + std::to_string(k + 1)};
  rep.checks.push_back(sq);

  SubCheck braid{"braid relation", true, a < 3 ? "no triple of strands" : ""};
  for (int k = 0; k + 1 < static_cast<int>(crossings.size()) && braid.ok; ++k) {
    const auto& s = crossings[k];
    const auto& t = crossings[k + 1];
    if (!(s * t * s == t * s * t)) braid = {braid.name, false, "fails at k = " + std::to_string(k + 1)};
  }
  rep.checks.push_back(braid);

  SubCheck slide{"dot-slide modulo Im d^{p-1}", true, ""};
  if (a >= 2) {
    EndComplex ec = end_complex(alg, 0);
    int exact = 0;
    for (int k = 0; k + 1 < a && slide.ok; ++k) {
      const auto& y1 = dots[k];
      const auto& y2 = dots[k + 1];
      const auto& t = crossings[k];
      PDGMatrix z[2] = {y1 * t - t * y2 - id, t * y1 - y2 * t - id};
      for (int w = 0; w < 2 && slide.ok; ++w) {
        if (z[w].is_zero()) {
          ++exact;
          continue;
        }
        if (!alg.diff(z[w]).is_zero()) {
          slide = {slide.name, false, "difference is not a cocycle at k = " + std::to_string(k + 1)};
          break;
        }
        if (!in_image(ec.cx, 0, ec.vector_of(z[w], 0), static_cast<int>(p) - 1))
          slide = {slide.name, false, "difference not a coboundary at k = " + std::to_string(k + 1)};
      }
    }
    if (slide.ok) slide.detail = std::to_string(exact) + " of " + std::to_string(2 * (a - 1)) + " hold exactly";
  }
  rep.checks.push_back(slide);

  SubCheck dims{"H_/ graded dims = NH_a scaled by p^2", true, ""};
  if (!alg.D.is_constant()) {
    dims = {dims.name, false, "module differential is not constant"};
  } else {
    auto got = end_slash_dims(alg, sym_cap);
    int pp = static_cast<int>(p);
    int lo = *std::min_element(alg.degree.begin(), alg.degree.end()) -
             *std::max_element(alg.degree.begin(), alg.degree.end());
    int hi = got[0].hi ? *got[0].hi : sym_cap;
    GradedDims want = matrix_series(scaled_coinvariant_degrees(a, pp * pp), a, 2 * pp * pp, lo, hi);
    std::string why;
    if (!compare_slash(got, want, lo, hi, &why)) dims = {dims.name, false, why};
    else dims.detail = "degrees " + std::to_string(lo) + ".." + std::to_string(hi) + ": " + got[0].str();
  }
  rep.checks.push_back(dims);
  return rep;
}

AcyclicityReport nh_acyclicity_check(fp_t p, int cap, bool twisted) {
  AcyclicityReport rep;
  rep.cap = cap;
  int pp = static_cast<int>(p);
  Tower t = make_tower(p, std::vector<int>(pp, 1));
  std::vector<long> twist(pp, 0);
  if (twisted)
    for (int i = 0; i < pp; ++i) twist[i] = i;
  EndAlgebra alg = tower_end_algebra(t, twist, twisted ? "NH_p twisted" : "NH_p");
  EndComplex ec = end_complex(alg, cap);
  Validation v = validate(ec.cx);
  rep.valid = v.ok;
  if (!v.ok) {
    rep.ok = false;
    rep.detail = "not a p-complex: " + v.message;
    return rep;
  }
  rep.slash = slash_dims(ec.cx);
  for (std::size_t k = 0; k < rep.slash.size(); ++k)
    for (auto [d, n] : rep.slash[k].dims)
      if (n && rep.ok) {
        rep.ok = false;
        rep.detail = "H_/" + std::to_string(k) + " has dimension " + std::to_string(n) + " in degree " + std::to_string(d);
      }
  return rep;
}

FormalityReport formality_check(int a, int b, fp_t p, int sym_cap) {
  FormalityReport rep;
  rep.sym_cap = sym_cap;
  int pp = static_cast<int>(p);
  EndAlgebra alg = end_algebra(a * pp, b * pp, p);
  rep.slash = end_slash_dims(alg, sym_cap);
  std::vector<int> lima;
  for (const auto& l : lima_partitions(b, a, pp)) lima.push_back(2 * size(l));
  rep.lo = *std::min_element(alg.degree.begin(), alg.degree.end()) - *std::max_element(alg.degree.begin(), alg.degree.end());
  rep.hi = rep.slash[0].hi ? *rep.slash[0].hi : sym_cap;
  rep.expected = matrix_series(lima, a + b, 2 * pp * pp, rep.lo, rep.hi);
  rep.ok = compare_slash(rep.slash, rep.expected, rep.lo, rep.hi, &rep.detail);
  return rep;
}

}  // namespace pdg

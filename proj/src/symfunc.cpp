#include "pdg/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pdg {

int size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

Partition transpose(const Partition& l) {
  Partition t;
  if (l.empty()) return t;
  t.assign(l[0], 0);
  for (int part : l)
    for (int j = 0; j < part; ++j) ++t[j];
  return t;
}

bool is_partition(const Partition& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] <= 0) return false;
    if (i > 0 && l[i] > l[i - 1]) return false;
  }
  return true;
}

bool fits_in(const Partition& l, int rows, int cols) {
  if (rows >= 0 && static_cast<int>(l.size()) > rows) return false;
  if (cols >= 0 && !l.empty() && l[0] > cols) return false;
  return true;
}

bool contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

std::string to_string(const Partition& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  int sa = size(a), sb = size(b);
  if (sa != sb) return sa < sb;
  return a > b;
}

namespace {
void gen_partitions(int m, int max_rows, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  if (max_rows == 0) return;
  int top = std::min(m, max_part);
  for (int first = top; first >= 1; --first) {
    // Remaining rows can hold at most first * (max_rows - 1) boxes.
    if (max_rows > 0 && static_cast<long>(first) * max_rows < m) break;
    cur.push_back(first);
    gen_partitions(m - first, max_rows < 0 ? -1 : max_rows - 1, first, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(int m, int max_rows, int max_part) {
  std::vector<Partition> out;
  if (m < 0) return out;
  Partition cur;
  gen_partitions(m, max_rows, max_part < 0 ? m : max_part, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int m = 0; m <= rows * cols; ++m) {
    auto v = partitions(m, rows, cols);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Partition complement_transpose(const Partition& l, int rows, int cols) {
  if (!fits_in(l, rows, cols)) throw std::invalid_argument("complement_transpose: partition not in box");
  Partition c;
  for (int r = rows - 1; r >= 0; --r) {
    int part = r < static_cast<int>(l.size()) ? l[r] : 0;
    if (cols - part > 0) c.push_back(cols - part);
  }
  return transpose(c);
}

Partition lima_expand(const Partition& nu, int p) {
  Partition out;
  for (int part : nu)
    for (int i = 0; i < p; ++i) out.push_back(part * p);
  return out;
}

std::vector<Partition> lima_partitions(int b, int a, int p) {
  std::vector<Partition> out;
  for (const auto& nu : partitions_in_box(b, a)) out.push_back(lima_expand(nu, p));
  return out;
}

namespace {

using LRMap = std::map<Partition, long, PartitionOrder>;

struct LRState {
  const Partition& mu;
  int max_rows;
  Partition shape;
  std::vector<std::vector<int>> cnt;  // cnt[label][row]
  LRMap out;
};

void lr_label(LRState& st, std::size_t label);

void lr_rows(LRState& st, std::size_t label, const Partition& old, std::size_t r, int remaining, int cum_label,
             int cum_prev) {
  if (remaining == 0) {
    lr_label(st, label + 1);
    return;
  }
  std::size_t len = old.size();
  if (r > len) return;
  if (st.max_rows >= 0 && static_cast<int>(r) >= st.max_rows) return;
  int old_r = r < len ? old[r] : 0;
  int room = (r == 0) ? remaining : std::min(remaining, old[r - 1] - old_r);
  // Lattice: label count in rows 0..r must not exceed previous-label count in rows 0..r-1.
  int prev_upto = cum_prev;
  int max_k = room;
  if (label > 0) max_k = std::min(max_k, prev_upto - cum_label);
  int prev_here = label > 0 ? st.cnt[label - 1][r] : 0;
  for (int k = max_k; k >= 0; --k) {
    if (r == len && k > 0) {
      if (st.shape.size() <= r) st.shape.resize(r + 1, 0);
    }
    if (st.shape.size() <= r) st.shape.resize(r + 1, 0);
    st.shape[r] = old_r + k;
    st.cnt[label][r] = k;
    lr_rows(st, label, old, r + 1, remaining - k, cum_label + k, cum_prev + prev_here);
    st.cnt[label][r] = 0;
    st.shape[r] = old_r;
  }
  while (!st.shape.empty() && st.shape.back() == 0) st.shape.pop_back();
}

void lr_label(LRState& st, std::size_t label) {
  if (label == st.mu.size()) {
    Partition res = st.shape;
    while (!res.empty() && res.back() == 0) res.pop_back();
    st.out[res] += 1;
    return;
  }
  Partition old = st.shape;
  while (!old.empty() && old.back() == 0) old.pop_back();
  st.shape = old;
  if (st.cnt[label].size() < old.size() + st.mu.size() + 1) st.cnt[label].resize(old.size() + st.mu.size() + 1, 0);
  if (label > 0 && st.cnt[label - 1].size() < st.cnt[label].size()) st.cnt[label - 1].resize(st.cnt[label].size(), 0);
  lr_rows(st, label, old, 0, st.mu[label], 0, 0);
  st.shape = old;
}

std::shared_mutex g_lr_mu;
std::map<std::tuple<Partition, Partition, int>, LRMap> g_lr_memo;

}  // namespace

const std::map<Partition, long, PartitionOrder>& lr_product(const Partition& l, const Partition& m, int max_rows) {
  // Commutative: put the larger factor first so fewer labels are placed.
  const Partition& big = (size(l) >= size(m)) ? l : m;
  const Partition& small = (size(l) >= size(m)) ? m : l;
  auto key = std::make_tuple(big, small, max_rows < 0 ? -1 : max_rows);
  {
    std::shared_lock lock(g_lr_mu);
    auto it = g_lr_memo.find(key);
    if (it != g_lr_memo.end()) return it->second;
  }
  LRState st{small, max_rows < 0 ? -1 : max_rows, big, {}, {}};
  st.cnt.assign(small.size(), std::vector<int>(big.size() + small.size() + 1, 0));
  if (max_rows >= 0 && static_cast<int>(big.size()) > max_rows) {
    // The first factor already vanishes.
  } else {
    lr_label(st, 0);
  }
  std::unique_lock lock(g_lr_mu);
  auto [it, fresh] = g_lr_memo.emplace(key, std::move(st.out));
  return it->second;
}

long lr_coefficient(const Partition& l, const Partition& m, const Partition& nu) {
  if (size(l) + size(m) != size(nu)) return 0;
  const auto& prod = lr_product(l, m, -1);
  auto it = prod.find(nu);
  return it == prod.end() ? 0 : it->second;
}

SchurPoly SchurPoly::schur(fp_t p, std::optional<int> n, const Partition& l, long c) {
  if (!is_partition(l)) throw std::invalid_argument("not a partition: " + to_string(l));
  SchurPoly f(p, n);
  f.add_term(l, c);
  return f;
}

fp_t SchurPoly::coeff(const Partition& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? 0 : it->second;
}

void SchurPoly::add_term(const Partition& l, long c) {
  if (n_ && static_cast<int>(l.size()) > *n_) return;
  fp_t x = fp_reduce(c, p_);
  if (!x) return;
  auto [it, fresh] = terms_.emplace(l, x);
  if (!fresh) {
    it->second = fp_add(it->second, x, p_);
    if (!it->second) terms_.erase(it);
  }
}

void SchurPoly::check_compatible(const SchurPoly& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("SchurPoly: mismatched p or number of variables");
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
  check_compatible(o);
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& o) {
  check_compatible(o);
  for (const auto& [l, c] : o.terms_) add_term(l, fp_neg(c, p_));
  return *this;
}

SchurPoly SchurPoly::operator+(const SchurPoly& o) const {
  SchurPoly r = *this;
  return r += o;
}

SchurPoly SchurPoly::operator-(const SchurPoly& o) const {
  SchurPoly r = *this;
  return r -= o;
}

SchurPoly SchurPoly::operator-() const { return scaled(-1); }

SchurPoly SchurPoly::scaled(long c) const {
  SchurPoly r(p_, n_);
  fp_t x = fp_reduce(c, p_);
  if (!x) return r;
  for (const auto& [l, a] : terms_) r.terms_.emplace(l, fp_mul(a, x, p_));
  return r;
}

SchurPoly SchurPoly::truncated(int cap) const {
  SchurPoly r(p_, n_);
  for (const auto& [l, a] : terms_)
    if (2 * size(l) <= cap) r.terms_.emplace(l, a);
  return r;
}

std::string SchurPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*s[";
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << "]";
  }
  return os.str();
}

SchurPoly SchurPoly::parse(const std::string& s, fp_t p, std::optional<int> n) {
  SchurPoly f(p, n);
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "0" || t.empty()) return f;
  std::size_t pos = 0;
  while (pos < t.size()) {
    long sign = 1;
    if (t[pos] == '+') ++pos;
    else if (t[pos] == '-') {
      sign = -1;
      ++pos;
    }
    long c = 1;
    std::size_t star = t.find("s[", pos);
    if (star == std::string::npos) throw std::invalid_argument("SchurPoly::parse: expected s[...]");
    if (star > pos) {
      std::string num = t.substr(pos, star - pos);
      if (num.back() != '*') throw std::invalid_argument("SchurPoly::parse: expected '*'");
      num.pop_back();
      c = std::stol(num);
    }
    std::size_t close = t.find(']', star);
    if (close == std::string::npos) throw std::invalid_argument("SchurPoly::parse: missing ']'");
    Partition l;
    std::string body = t.substr(star + 2, close - star - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) l.push_back(std::stoi(part));
    if (!is_partition(l)) throw std::invalid_argument("SchurPoly::parse: not a partition");
    f.add_term(l, sign * c);
    pos = close + 1;
  }
  return f;
}

SchurPoly mult(const SchurPoly& f, const SchurPoly& g) {
  if (f.p() != g.p() || f.n() != g.n()) throw std::invalid_argument("mult: mismatched p or number of variables");
  fp_t p = f.p();
  SchurPoly r(p, f.n());
  int rows = f.n() ? *f.n() : -1;
  for (const auto& [l, a] : f.terms())
    for (const auto& [m, b] : g.terms()) {
      fp_t ab = fp_mul(a, b, p);
      for (const auto& [nu, c] : lr_product(l, m, rows)) r.add_term(nu, static_cast<long>(fp_mul(ab, fp_reduce(c, p), p)));
    }
  return r;
}

SchurPoly power(const SchurPoly& f, int k) {
  SchurPoly r = SchurPoly::one(f.p(), f.n());
  for (int i = 0; i < k; ++i) r = mult(r, f);
  return r;
}

SchurPoly elementary(int r, fp_t p, std::optional<int> n) {
  if (r < 0) throw std::invalid_argument("elementary: negative degree");
  SchurPoly f(p, n);
  if (n && r > *n) return f;
  f.add_term(Partition(r, 1), 1);
  return f;
}

SchurPoly complete(int r, fp_t p, std::optional<int> n) {
  if (r < 0) throw std::invalid_argument("complete: negative degree");
  SchurPoly f(p, n);
  f.add_term(r == 0 ? Partition{} : Partition{r}, 1);
  return f;
}

SchurPoly box_diff(const SchurPoly& f, long shift) {
  SchurPoly r(f.p(), f.n());
  for (const auto& [l, a] : f.terms()) {
    int len = static_cast<int>(l.size());
    for (int row = 0; row <= len; ++row) {
      int col = row < len ? l[row] : 0;
      if (row > 0 && l[row - 1] <= col) continue;  // not addable
      if (row == len && f.n() && len >= *f.n()) continue;
      long coef = static_cast<long>(col) - row + shift;
      fp_t c = fp_reduce(coef, f.p());
      if (!c) continue;
      Partition m = l;
      if (row == len) m.push_back(1);
      else ++m[row];
      r.add_term(m, static_cast<long>(fp_mul(c, a, f.p())));
    }
  }
  return r;
}

SchurPoly diff(const SchurPoly& f) { return box_diff(f, 0); }

SchurPoly twisted_diff(const SchurPoly& f, long a) { return box_diff(f, a); }

SchurPoly omega(const SchurPoly& f) {
  SchurPoly r(f.p(), f.n());
  for (const auto& [l, a] : f.terms()) r.add_term(transpose(l), (size(l) % 2 ? -1L : 1L) * static_cast<long>(a));
  return r;
}

namespace {
void sub_partitions(const Partition& l, std::size_t row, Partition& cur, std::vector<Partition>& out) {
  if (row == l.size()) {
    Partition t = cur;
    while (!t.empty() && t.back() == 0) t.pop_back();
    out.push_back(t);
    return;
  }
  int cap = l[row];
  if (row > 0) cap = std::min(cap, cur[row - 1]);
  for (int x = 0; x <= cap; ++x) {
    cur.push_back(x);
    sub_partitions(l, row + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

SchurTensor split_vars(const SchurPoly& f, int a, int b) {
  if (f.n() && *f.n() != a + b) throw std::invalid_argument("split_vars: f must live in Sym_{a+b}");
  SchurTensor out;
  fp_t p = f.p();
  for (const auto& [l, c] : f.terms()) {
    if (static_cast<int>(l.size()) > a + b) continue;
    std::vector<Partition> subs;
    Partition cur;
    sub_partitions(l, 0, cur, subs);
    for (const auto& mu : subs) {
      if (static_cast<int>(mu.size()) > a) continue;
      for (const auto& nu : partitions(size(l) - size(mu), b)) {
        if (!contains(l, nu)) continue;
        long k = lr_coefficient(mu, nu, l);
        if (!k) continue;
        fp_t add = fp_mul(c, fp_reduce(k, p), p);
        auto key = std::make_pair(mu, nu);
        fp_t v = fp_add(out[key], add, p);
        if (v) out[key] = v;
        else out.erase(key);
      }
    }
  }
  return out;
}

SchurPoly theta0(const EPrimePoly& g, fp_t p, std::optional<int> n) {
  SchurPoly r(p, n);
  int pp = static_cast<int>(p);
  for (const auto& [expo, c] : g) {
    SchurPoly term = SchurPoly::one(p, n);
    for (std::size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] < 0) throw std::invalid_argument("theta0: negative exponent");
      if (!expo[i]) continue;
      SchurPoly e = power(elementary(static_cast<int>(i + 1) * pp, p, n), pp);
      term = mult(term, power(e, expo[i]));
    }
    r += term.scaled(c);
  }
  return r;
}

int SchurComplex::index_of(const Partition& l) const {
  auto it = basis.find(2 * size(l));
  if (it == basis.end()) return -1;
  const auto& v = it->second;
  auto pos = std::lower_bound(v.begin(), v.end(), l, PartitionOrder());
  if (pos == v.end() || *pos != l) return -1;
  return static_cast<int>(pos - v.begin());
}

DenseVec SchurComplex::vector_of(const SchurPoly& f, int degree) const {
  DenseVec v(cx.dim(degree), 0);
  for (const auto& [l, c] : f.terms()) {
    if (2 * size(l) != degree) continue;
    int i = index_of(l);
    if (i < 0) throw std::invalid_argument("vector_of: term " + to_string(l) + " outside the complex");
    v[i] = c;
  }
  return v;
}

SchurComplex box_complex(fp_t p, int rows, int cols, long shift, std::optional<int> cap) {
  if (!cap && (rows < 0 || cols < 0)) throw std::invalid_argument("box_complex: unbounded complex needs a cap");
  SchurComplex sc;
  sc.cx = PComplex(p);
  sc.cx.hi = cap;
  int max_m = (rows >= 0 && cols >= 0) ? rows * cols : 1 << 30;
  if (cap) max_m = std::min(max_m, *cap / 2);
  if (cap && rows >= 0 && cols >= 0 && *cap >= 2 * rows * cols) sc.cx.hi = std::nullopt;
  for (int m = 0; m <= max_m; ++m) {
    auto v = partitions(m, rows, cols);
    if (v.empty()) continue;
    sc.cx.set_dim(2 * m, static_cast<int>(v.size()));
    sc.basis[2 * m] = std::move(v);
  }
  for (const auto& [deg, src] : sc.basis) {
    if (!sc.basis.count(deg + 2)) continue;
    SparseMat m(sc.cx.dim(deg + 2), sc.cx.dim(deg));
    for (std::size_t j = 0; j < src.size(); ++j) {
      const Partition& l = src[j];
      int len = static_cast<int>(l.size());
      SparseVec col;
      for (int row = 0; row <= len; ++row) {
        int c = row < len ? l[row] : 0;
        if (row > 0 && l[row - 1] <= c) continue;
        if (row == len && rows >= 0 && len >= rows) continue;
        if (cols >= 0 && c + 1 > cols) continue;
        fp_t coef = fp_reduce(static_cast<long>(c) - row + shift, p);
        if (!coef) continue;
        Partition nl = l;
        if (row == len) nl.push_back(1);
        else ++nl[row];
        int idx = sc.index_of(nl);
        col.emplace_back(idx, coef);
      }
      std::sort(col.begin(), col.end());
      m.col[j] = std::move(col);
    }
    sc.cx.set_diff(deg, std::move(m));
  }
  return sc;
}

SchurComplex as_pcomplex(SymSource src, fp_t p, const SymParams& prm, std::optional<int> cap) {
  int pp = static_cast<int>(p);
  SchurComplex sc;
  switch (src) {
    case SymSource::Sym:
      if (!cap) throw std::invalid_argument("as_pcomplex: Sym_n needs a degree cap");
      sc = box_complex(p, prm.n, -1, 0, cap);
      break;
    case SymSource::Twisted:
      if (!cap) throw std::invalid_argument("as_pcomplex: S_n(a) needs a degree cap");
      sc = box_complex(p, prm.n, -1, prm.a, cap);
      break;
    case SymSource::Vab:
      // The twist -ap vanishes mod p.
      sc = box_complex(p, prm.b * pp, static_cast<int>(prm.a) * pp, 0, cap);
      break;
    case SymSource::Vi:
      if (prm.i < 0 || prm.k * pp - prm.i < 0) throw std::invalid_argument("as_pcomplex: V_i needs 0 <= i <= kp");
      sc = box_complex(p, prm.i, prm.k * pp - prm.i, prm.i, cap);
      break;
  }
  if (sc.cx.hi && *sc.cx.hi - 2 * (pp - 1) < 0)
    throw std::invalid_argument("as_pcomplex: window too small for any valid degree");
  return sc;
}

}  // namespace pdg

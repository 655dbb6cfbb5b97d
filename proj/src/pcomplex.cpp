#include "pdg/pcomplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdg {

long GradedDims::at(int d) const {
  if (!in_window(d)) throw std::out_of_range("GradedDims: degree " + std::to_string(d) + " outside window");
  auto it = dims.find(d);
  return it == dims.end() ? 0 : it->second;
}

void GradedDims::add(int d, long n) {
  if (n == 0) return;
  long& x = dims[d];
  x += n;
  if (x == 0) dims.erase(d);
}

std::string GradedDims::str() const {
  std::ostringstream os;
  os << "[" << (lo ? std::to_string(*lo) : "-inf") << ", " << (hi ? std::to_string(*hi) : "inf") << "] {";
  bool first = true;
  for (auto [d, n] : dims) {
    os << (first ? "" : ", ") << d << ":" << n;
    first = false;
  }
  os << "}";
  return os.str();
}

bool dims_agree(const GradedDims& a, const GradedDims& b, int from, int to, std::string* why) {
  for (int d = from; d <= to; ++d) {
    if (!a.in_window(d) || !b.in_window(d)) continue;
    if (a.at(d) != b.at(d)) {
      if (why) *why = "degree " + std::to_string(d) + ": " + std::to_string(a.at(d)) + " vs " + std::to_string(b.at(d));
      return false;
    }
  }
  return true;
}

int PComplex::dim(int s) const {
  auto it = dims.find(s);
  return it == dims.end() ? 0 : it->second;
}

int PComplex::total_dim() const {
  int t = 0;
  for (auto [s, n] : dims) t += n;
  return t;
}

int PComplex::min_deg() const {
  if (dims.empty()) throw std::logic_error("min_deg of empty complex");
  return dims.begin()->first;
}

int PComplex::max_deg() const {
  if (dims.empty()) throw std::logic_error("max_deg of empty complex");
  return dims.rbegin()->first;
}

SparseMat PComplex::diff(int s) const {
  auto it = d.find(s);
  if (it != d.end()) return it->second;
  return SparseMat(dim(s + 2), dim(s));
}

SparseMat PComplex::power(int s, int j) const {
  SparseMat m(dim(s), dim(s));
  for (int i = 0; i < m.cols; ++i) m.col[i] = {{i, 1}};
  for (int t = 0; t < j; ++t) m = compose(diff(s + 2 * t), m, p);
  return m;
}

void PComplex::set_dim(int s, int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  if (n == 0) dims.erase(s);
  else dims[s] = n;
}

void PComplex::set_diff(int s, SparseMat m) {
  if (m.cols != dim(s) || m.rows != dim(s + 2))
    throw std::invalid_argument("set_diff: shape does not match degrees " + std::to_string(s));
  if (m.is_zero()) {
    d.erase(s);
    return;
  }
  d[s] = std::move(m);
}

std::optional<int> PComplex::valid_lo() const {
  if (!lo) return std::nullopt;
  return *lo + 2 * (static_cast<int>(p) - 1);
}

std::optional<int> PComplex::valid_hi() const {
  if (!hi) return std::nullopt;
  return *hi - 2 * (static_cast<int>(p) - 1);
}

bool PComplex::valid(int s) const {
  auto l = valid_lo();
  auto h = valid_hi();
  return (!l || s >= *l) && (!h || s <= *h);
}

Validation validate(const PComplex& c) {
  Validation v;
  for (const auto& [s, m] : c.d) {
    if (m.cols != c.dim(s) || m.rows != c.dim(s + 2)) {
      v.ok = false;
      v.degree = s;
      v.message = "differential at degree " + std::to_string(s) + " is not homogeneous of degree 2";
      return v;
    }
    for (const auto& col : m.col)
      for (auto [i, a] : col)
        if (i < 0 || i >= m.rows || a == 0 || a >= c.p) {
          v.ok = false;
          v.degree = s;
          v.message = "malformed entry in differential at degree " + std::to_string(s);
          return v;
        }
  }
  int pp = static_cast<int>(c.p);
  for (auto [s, n] : c.dims) {
    if (c.hi && s + 2 * pp > *c.hi) continue;
    SparseMat m = c.power(s, pp);
    for (int j = 0; j < n; ++j)
      if (!m.col[j].empty()) {
        v.ok = false;
        v.degree = s;
        v.index = j;
        v.message = "d^p is nonzero on basis vector " + std::to_string(j) + " of degree " + std::to_string(s);
        return v;
      }
  }
  return v;
}

namespace {

// Memoized ranks of d^j out of each degree.
class RankTable {
 public:
  explicit RankTable(const PComplex& c) : c_(c) {}
  int rank(int s, int j) {
    if (j == 0) return c_.dim(s);
    if (c_.dim(s) == 0) return 0;
    auto key = std::make_pair(s, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto& pw = powers_[s];
    if (pw.empty()) pw.push_back(c_.power(s, 0));
    while (static_cast<int>(pw.size()) <= j) {
      int t = static_cast<int>(pw.size()) - 1;
      pw.push_back(compose(c_.diff(s + 2 * t), pw.back(), c_.p));
    }
    int r = sparse_rank(pw[j], c_.p);
    memo_[key] = r;
    return r;
  }

 private:
  const PComplex& c_;
  std::map<std::pair<int, int>, int> memo_;
  std::map<int, std::vector<SparseMat>> powers_;
};

std::vector<GradedDims> empty_slash(const PComplex& c) {
  int pp = static_cast<int>(c.p);
  std::vector<GradedDims> out(pp - 1);
  for (auto& g : out) {
    g.lo = c.valid_lo();
    g.hi = c.valid_hi();
  }
  return out;
}

}  // namespace

std::vector<GradedDims> slash_dims(const PComplex& c) {
  int pp = static_cast<int>(c.p);
  auto out = empty_slash(c);
  RankTable rt(c);
  for (auto [s, n] : c.dims) {
    if (!c.valid(s)) continue;
    for (int k = 0; k <= pp - 2; ++k) {
      long dimk = static_cast<long>(rt.rank(s, k)) - rt.rank(s, k + 1) - rt.rank(s - 2 * (pp - 1 - k), pp - 1);
      if (dimk < 0) throw std::logic_error("slash_dims: negative dimension");
      out[k].add(s, dimk);
    }
  }
  return out;
}

SlashCohomology slash_cohomology(const PComplex& c) {
  int pp = static_cast<int>(c.p);
  SlashCohomology h;
  h.p = c.p;
  h.dims = empty_slash(c);
  h.reps.resize(pp - 1);
  for (auto [s, n] : c.dims) {
    if (!c.valid(s)) continue;
    std::vector<std::vector<DenseVec>> ker(pp + 1);
    for (int j = 1; j <= pp; ++j) ker[j] = kernel_basis(c.power(s, j), c.p);
    for (int k = 0; k <= pp - 2; ++k) {
      Echelon sub(n, c.p);
      for (const auto& v : ker[k]) sub.insert(v);
      int src = s - 2 * (pp - k - 1);
      int ns = c.dim(src);
      if (ns > 0) {
        SparseMat m = c.power(src, pp - k - 1);
        for (const auto& col : m.col)
          if (!col.empty()) sub.insert(dense_from_sparse(col, n));
      }
      auto reps = complement(sub, ker[k + 1]);
      h.dims[k].add(s, static_cast<long>(reps.size()));
      if (!reps.empty()) h.reps[k][s] = std::move(reps);
    }
  }
  return h;
}

std::vector<PString> string_decompose(const PComplex& c) {
  int pp = static_cast<int>(c.p);
  std::vector<PString> out;
  for (auto [s, n] : c.dims) {
    std::vector<std::vector<DenseVec>> ker(pp + 1);
    for (int j = 1; j <= pp; ++j) ker[j] = kernel_basis(c.power(s, j), c.p);
    // Kernels one step below, pushed forward by d.
    int below = s - 2;
    int nb = c.dim(below);
    std::vector<std::vector<DenseVec>> pushed(pp + 2);
    if (nb > 0) {
      SparseMat d = c.diff(below);
      auto kb = [&](int j) {
        if (j > pp) {
          std::vector<DenseVec> all;
          for (int i = 0; i < nb; ++i) {
            DenseVec e(nb, 0);
            e[i] = 1;
            all.push_back(e);
          }
          return all;
        }
        return kernel_basis(c.power(below, j), c.p);
      };
      for (int j = 2; j <= pp + 1; ++j)
        for (const auto& x : kb(j)) pushed[j].push_back(apply(d, x, c.p));
    }
    for (int len = pp; len >= 1; --len) {
      Echelon sub(n, c.p);
      for (const auto& v : ker[len - 1]) sub.insert(v);
      for (const auto& v : pushed[len + 1]) sub.insert(v);
      auto heads = complement(sub, ker[len]);
      for (auto& h : heads) {
        PString st;
        st.head = s;
        st.length = len;
        DenseVec cur = h;
        for (int t = 0; t < len; ++t) {
          st.vecs.push_back(cur);
          if (t + 1 < len) cur = apply(c.diff(s + 2 * t), cur, c.p);
        }
        st.exact = (!c.lo || s >= *c.lo + 2) && (!c.hi || st.end() + 2 <= *c.hi);
        out.push_back(std::move(st));
      }
    }
  }
  return out;
}

std::map<std::pair<int, int>, long> string_counts(const PComplex& c) {
  int pp = static_cast<int>(c.p);
  RankTable rt(c);
  auto r = [&](int s, int j) -> long { return j > pp ? 0 : rt.rank(s, j); };
  std::map<std::pair<int, int>, long> out;
  for (auto [s, n] : c.dims)
    for (int len = 1; len <= pp; ++len) {
      long cnt = r(s, len - 1) - r(s, len) + r(s - 2, len + 1) - r(s - 2, len);
      if (cnt < 0) throw std::logic_error("string_counts: negative count");
      if (cnt) out[{len, s}] = cnt;
    }
  return out;
}

PComplex string_complex(fp_t p, int length, int head) {
  PComplex c(p);
  for (int i = 0; i < length; ++i) c.set_dim(head + 2 * i, 1);
  for (int i = 0; i + 1 < length; ++i) {
    SparseMat m(1, 1);
    m.col[0] = {{0, 1}};
    c.set_diff(head + 2 * i, m);
  }
  return c;
}

PComplex shift(const PComplex& c, int k) {
  PComplex out(c.p);
  if (c.lo) out.lo = *c.lo + k;
  if (c.hi) out.hi = *c.hi + k;
  for (auto [s, n] : c.dims) out.dims[s + k] = n;
  for (const auto& [s, m] : c.d) out.d[s + k] = m;
  return out;
}

PComplex direct_sum(const PComplex& a, const PComplex& b) {
  if (a.p != b.p) throw std::invalid_argument("direct_sum: mismatched p");
  PComplex out(a.p);
  auto pick = [](std::optional<int> x, std::optional<int> y, bool lower) -> std::optional<int> {
    if (!x) return y;
    if (!y) return x;
    return lower ? std::max(*x, *y) : std::min(*x, *y);
  };
  out.lo = pick(a.lo, b.lo, true);
  out.hi = pick(a.hi, b.hi, false);
  for (auto [s, n] : a.dims) out.dims[s] += n;
  for (auto [s, n] : b.dims) out.dims[s] += n;
  for (auto [s, n] : out.dims) {
    SparseMat m(out.dim(s + 2), n);
    SparseMat ma = a.diff(s), mb = b.diff(s);
    int na = a.dim(s), na2 = a.dim(s + 2);
    for (int j = 0; j < ma.cols; ++j) m.col[j] = ma.col[j];
    for (int j = 0; j < mb.cols; ++j)
      for (auto [i, x] : mb.col[j]) m.col[na + j].emplace_back(na2 + i, x);
    out.set_diff(s, std::move(m));
  }
  return out;
}

PComplex tensor(const PComplex& a, const PComplex& b) {
  if (a.p != b.p) throw std::invalid_argument("tensor: mismatched p");
  PComplex out(a.p);
  if (a.empty() || b.empty()) return out;
  std::optional<int> hi, lo;
  if (a.hi) hi = *a.hi + b.min_deg();
  if (b.hi) hi = hi ? std::min(*hi, *b.hi + a.min_deg()) : *b.hi + a.min_deg();
  if (a.lo) lo = *a.lo + b.max_deg();
  if (b.lo) lo = lo ? std::max(*lo, *b.lo + a.max_deg()) : *b.lo + a.max_deg();
  out.lo = lo;
  out.hi = hi;
  auto inside = [&](int t) { return (!lo || t >= *lo) && (!hi || t <= *hi); };
  // offsets[t][sa] = position of the (sa, t - sa) block inside degree t.
  std::map<int, std::map<int, int>> offsets;
  for (auto [sa, na] : a.dims)
    for (auto [sb, nb] : b.dims) {
      int t = sa + sb;
      if (!inside(t)) continue;
      auto& off = offsets[t];
      off[sa] = 0;
    }
  for (auto& [t, off] : offsets) {
    int pos = 0;
    for (auto& [sa, o] : off) {
      o = pos;
      pos += a.dim(sa) * b.dim(t - sa);
    }
    out.set_dim(t, pos);
  }
  for (auto& [t, off] : offsets) {
    if (!out.dims.count(t + 2)) continue;
    const auto& off2 = offsets[t + 2];
    SparseMat m(out.dim(t + 2), out.dim(t));
    for (auto [sa, o] : off) {
      int sb = t - sa;
      int na = a.dim(sa), nb = b.dim(sb);
      SparseMat da = a.diff(sa), db = b.diff(sb);
      auto ita = off2.find(sa + 2);
      auto itb = off2.find(sa);
      int nb_same = nb, nb_up = b.dim(sb + 2);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
          SparseVec col;
          if (ita != off2.end())
            for (auto [i2, x] : da.col[i]) col.emplace_back(ita->second + i2 * nb_same + j, x);
          if (itb != off2.end())
            for (auto [j2, x] : db.col[j]) col.emplace_back(itb->second + i * nb_up + j2, x);
          std::sort(col.begin(), col.end());
          m.col[o + i * nb + j] = std::move(col);
        }
    }
    out.set_diff(t, std::move(m));
  }
  return out;
}

PComplex dual(const PComplex& c) {
  if (c.lo || c.hi) throw std::invalid_argument("dual: complex must be finite (untruncated)");
  PComplex out(c.p);
  for (auto [s, n] : c.dims) out.dims[-s] = n;
  for (const auto& [s, m] : c.d) {
    // Source of the dual map is degree -(s+2), target -s.
    SparseMat t(m.cols, m.rows);
    for (int j = 0; j < m.cols; ++j)
      for (auto [i, x] : m.col[j]) t.col[i].emplace_back(j, fp_neg(x, c.p));
    for (auto& col : t.col) std::sort(col.begin(), col.end());
    out.set_diff(-s - 2, std::move(t));
  }
  return out;
}

std::vector<GradedDims> slash_dims_tensor(const PComplex& a, const PComplex& w) {
  if (w.lo || w.hi) throw std::invalid_argument("slash_dims_tensor: second factor must be finite");
  int pp = static_cast<int>(a.p);
  auto counts = string_counts(w);
  std::map<int, std::vector<GradedDims>> by_len;
  for (const auto& [key, cnt] : counts) {
    int len = key.first;
    if (!by_len.count(len)) by_len[len] = slash_dims(tensor(a, string_complex(a.p, len, 0)));
  }
  std::vector<GradedDims> out(pp - 1);
  bool first = true;
  for (const auto& [key, cnt] : counts) {
    auto [len, head] = key;
    const auto& part = by_len[len];
    for (int k = 0; k <= pp - 2; ++k) {
      auto& g = out[k];
      std::optional<int> plo = part[k].lo ? std::optional<int>(*part[k].lo + head) : std::nullopt;
      std::optional<int> phi = part[k].hi ? std::optional<int>(*part[k].hi + head) : std::nullopt;
      if (first) {
        g.lo = plo;
        g.hi = phi;
      } else {
        if (plo) g.lo = g.lo ? std::max(*g.lo, *plo) : *plo;
        if (phi) g.hi = g.hi ? std::min(*g.hi, *phi) : *phi;
      }
      for (auto [d, n] : part[k].dims) g.add(d + head, n * cnt);
    }
    first = false;
  }
  for (auto& g : out) {
    std::map<int, long> kept;
    for (auto [d, n] : g.dims)
      if (g.in_window(d)) kept[d] = n;
    g.dims = std::move(kept);
  }
  return out;
}

KunnethResult kunneth_check(const PComplex& a, const PComplex& m) {
  KunnethResult res;
  int pp = static_cast<int>(a.p);
  auto ha = slash_dims(a);
  for (int k = 1; k <= pp - 2; ++k)
    if (!ha[k].dims.empty()) {
      res.status = KunnethStatus::PreconditionFailed;
      res.detail = "H_/" + std::to_string(k) + " of the first factor is nonzero";
      return res;
    }
  auto hm = slash_dims(m);
  PComplex t = tensor(a, m);
  auto ht = slash_dims(t);
  if (a.empty() || m.empty() || t.empty()) return res;
  int amin = a.min_deg(), amax = a.max_deg(), mmin = m.min_deg(), mmax = m.max_deg();
  for (auto [s, n] : t.dims) {
    if (!t.valid(s)) continue;
    bool ok = true;
    for (int d1 = amin; d1 <= amax && ok; ++d1) {
      int d2 = s - d1;
      if (d2 < mmin || d2 > mmax) continue;
      if (!ha[0].in_window(d1) || !hm[0].in_window(d2)) ok = false;
    }
    if (!ok) continue;
    ++res.degrees_compared;
    for (int k = 0; k <= pp - 2; ++k) {
      long conv = 0;
      for (auto [d1, x] : ha[0].dims) {
        int d2 = s - d1;
        if (d2 < mmin || d2 > mmax) continue;
        conv += x * hm[k].at(d2);
      }
      if (conv != ht[k].at(s)) {
        res.status = KunnethStatus::Fails;
        res.detail = "k=" + std::to_string(k) + " degree " + std::to_string(s) + ": " + std::to_string(ht[k].at(s)) +
                     " vs convolution " + std::to_string(conv);
        return res;
      }
    }
  }
  return res;
}

GradedDims hilbert(const PComplex& c) {
  GradedDims g;
  g.lo = c.lo;
  g.hi = c.hi;
  for (auto [s, n] : c.dims) g.add(s, n);
  return g;
}

GradedDims total(const std::vector<GradedDims>& parts) {
  GradedDims g;
  if (parts.empty()) return g;
  g.lo = parts[0].lo;
  g.hi = parts[0].hi;
  for (const auto& x : parts)
    for (auto [d, n] : x.dims) g.add(d, n);
  return g;
}

GradedDims hilbert(const SlashCohomology& h) { return total(h.dims); }

bool in_image(const PComplex& c, int s, const DenseVec& v, int power) {
  int n = c.dim(s);
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("in_image: vector has wrong length");
  SparseVec sv = sparse_from_dense(v);
  if (sv.empty()) return true;
  int src = s - 2 * power;
  if (c.dim(src) == 0) return false;
  SparseMat m = c.power(src, power);
  int r = sparse_rank(m, c.p);
  m.col.push_back(sv);
  return sparse_rank(m.col, n, c.p) == r;
}

}  // namespace pdg

#include "pdg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdg {

fp_t fp_reduce(long long x, fp_t p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<fp_t>(r);
}

fp_t fp_inv(fp_t a, fp_t p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  std::uint64_t base = a % p, r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<fp_t>(r);
}

bool SparseMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

SparseVec sparse_from_dense(const DenseVec& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) out.emplace_back(i, v[i]);
  return out;
}

DenseVec dense_from_sparse(const SparseVec& v, int n) {
  DenseVec out(n, 0);
  for (auto [i, c] : v) out[i] = c;
  return out;
}

void axpy(SparseVec& dst, fp_t c, const SparseVec& src, fp_t p) {
  if (c == 0 || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, fp_mul(c, src[j].second, p));
      ++j;
    } else {
      fp_t s = fp_add(dst[i].second, fp_mul(c, src[j].second, p), p);
      if (s) out.emplace_back(dst[i].first, s);
      ++i;
      ++j;
    }
  }
  dst.swap(out);
}

SparseVec apply(const SparseMat& m, const SparseVec& v, fp_t p) {
  DenseVec acc(m.rows, 0);
  bool any = false;
  for (auto [j, c] : v)
    for (auto [i, a] : m.col[j]) {
      acc[i] = fp_add(acc[i], fp_mul(a, c, p), p);
      any = true;
    }
  if (!any) return {};
  return sparse_from_dense(acc);
}

DenseVec apply(const SparseMat& m, const DenseVec& v, fp_t p) {
  DenseVec acc(m.rows, 0);
  for (int j = 0; j < m.cols; ++j) {
    if (!v[j]) continue;
    for (auto [i, a] : m.col[j]) acc[i] = fp_add(acc[i], fp_mul(a, v[j], p), p);
  }
  return acc;
}

SparseMat compose(const SparseMat& a, const SparseMat& b, fp_t p) {
  if (a.cols != b.rows) throw std::invalid_argument("compose: shape mismatch");
  SparseMat out(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) out.col[j] = apply(a, b.col[j], p);
  return out;
}

int sparse_rank(const std::vector<SparseVec>& vecs, int n, fp_t p) {
  // Echelon rows keyed by pivot (lowest index), normalized to leading 1.
  std::vector<int> pivot(n, -1);
  std::vector<SparseVec> rows;
  DenseVec acc(n, 0);
  for (const auto& v : vecs) {
    if (v.empty()) continue;
    for (auto [i, c] : v) acc[i] = c;
    int lo = v.front().first;
    int found = -1;
    for (int i = lo; i < n; ++i) {
      fp_t c = acc[i];
      if (!c) continue;
      int r = pivot[i];
      if (r < 0) {
        found = i;
        break;
      }
      fp_t f = fp_neg(c, p);
      for (auto [k, a] : rows[r]) acc[k] = fp_add(acc[k], fp_mul(f, a, p), p);
    }
    if (found >= 0) {
      fp_t inv = fp_inv(acc[found], p);
      SparseVec row;
      for (int i = found; i < n; ++i)
        if (acc[i]) {
          row.emplace_back(i, fp_mul(acc[i], inv, p));
          acc[i] = 0;
        }
      pivot[found] = static_cast<int>(rows.size());
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(rows.size());
}

void Echelon::reduce(DenseVec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int piv = pivot_of_[r];
    fp_t c = v[piv];
    if (!c) continue;
    fp_t f = fp_neg(c, p_);
    const auto& row = rows_[r];
    for (int k = piv; k < n_; ++k)
      if (row[k]) v[k] = fp_add(v[k], fp_mul(f, row[k], p_), p_);
  }
}

bool Echelon::insert(DenseVec v) {
  // Rows are kept fully reduced against each other so one pass suffices.
  reduce(v);
  int piv = -1;
  for (int i = 0; i < n_; ++i)
    if (v[i]) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  fp_t inv = fp_inv(v[piv], p_);
  for (auto& x : v) x = fp_mul(x, inv, p_);
  for (auto& row : rows_) {
    fp_t c = row[piv];
    if (!c) continue;
    fp_t f = fp_neg(c, p_);
    for (int k = piv; k < n_; ++k)
      if (v[k]) row[k] = fp_add(row[k], fp_mul(f, v[k], p_), p_);
  }
  pivot_row_[piv] = static_cast<int>(rows_.size());
  pivot_of_.push_back(piv);
  rows_.push_back(std::move(v));
  return true;
}

bool Echelon::contains(DenseVec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](fp_t x) { return x == 0; });
}

std::vector<DenseVec> kernel_basis(const SparseMat& m, fp_t p) {
  // Row-reduce the rows x cols matrix to RREF, then read off the null space.
  int R = m.rows, C = m.cols;
  std::vector<DenseVec> a(R, DenseVec(C, 0));
  for (int j = 0; j < C; ++j)
    for (auto [i, c] : m.col[j]) a[i][j] = c;
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int sel = -1;
    for (int i = r; i < R; ++i)
      if (a[i][c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    fp_t inv = fp_inv(a[r][c], p);
    for (int k = c; k < C; ++k) a[r][k] = fp_mul(a[r][k], inv, p);
    for (int i = 0; i < R; ++i) {
      if (i == r || !a[i][c]) continue;
      fp_t f = fp_neg(a[i][c], p);
      for (int k = c; k < C; ++k)
        if (a[r][k]) a[i][k] = fp_add(a[i][k], fp_mul(f, a[r][k], p), p);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(C, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<DenseVec> out;
  for (int f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    DenseVec v(C, 0);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(pivcol.size()); ++i)
      if (a[i][f]) v[pivcol[i]] = fp_neg(a[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<DenseVec> complement(const Echelon& sub, const std::vector<DenseVec>& candidates) {
  Echelon e = sub;
  std::vector<DenseVec> out;
  for (const auto& v : candidates)
    if (e.insert(v)) out.push_back(v);
  return out;
}

std::vector<DenseVec> invert(const std::vector<DenseVec>& cols, fp_t p) {
  int n = static_cast<int>(cols.size());
  // Augmented [A | I] in row form.
  std::vector<DenseVec> a(n, DenseVec(2 * n, 0));
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("invert: not square");
    for (int i = 0; i < n; ++i) a[i][j] = cols[j][i];
  }
  for (int i = 0; i < n; ++i) a[i][n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c]) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::domain_error("invert: singular matrix");
    std::swap(a[c], a[sel]);
    fp_t inv = fp_inv(a[c][c], p);
    for (auto& x : a[c]) x = fp_mul(x, inv, p);
    for (int i = 0; i < n; ++i) {
      if (i == c || !a[i][c]) continue;
      fp_t f = fp_neg(a[i][c], p);
      for (int k = 0; k < 2 * n; ++k)
        if (a[c][k]) a[i][k] = fp_add(a[i][k], fp_mul(f, a[c][k], p), p);
    }
  }
  std::vector<DenseVec> out(n, DenseVec(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j][i] = a[i][n + j];
  return out;
}

}  // namespace pdg

// Exact linear algebra over the prime field F_p.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pdg {

using fp_t = std::uint32_t;

fp_t fp_reduce(long long x, fp_t p);
fp_t fp_inv(fp_t a, fp_t p);

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) { fp_t s = a + b; return s >= p ? s - p : s; }
inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return a >= b ? a - b : a + p - b; }
inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
  return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p);
}
inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, fp_t>>;
using DenseVec = std::vector<fp_t>;

// Column-major sparse matrix: col[j] is the image of the j-th source basis vector.
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
  bool is_zero() const;
};

SparseVec sparse_from_dense(const DenseVec& v);
DenseVec dense_from_sparse(const SparseVec& v, int n);
// Adds c * src into dst (both sorted).
void axpy(SparseVec& dst, fp_t c, const SparseVec& src, fp_t p);
SparseVec apply(const SparseMat& m, const SparseVec& v, fp_t p);
DenseVec apply(const SparseMat& m, const DenseVec& v, fp_t p);
// a * b (apply b first).
SparseMat compose(const SparseMat& a, const SparseMat& b, fp_t p);

// Rank of the span of the given sparse vectors in F_p^n.
int sparse_rank(const std::vector<SparseVec>& vecs, int n, fp_t p);
inline int sparse_rank(const SparseMat& m, fp_t p) { return sparse_rank(m.col, m.rows, p); }

// Incremental echelon basis of a subspace of F_p^n; vectors are kept with
// leading coefficient 1 and pivots are the lowest nonzero index.
class Echelon {
 public:
  Echelon(int n, fp_t p) : n_(n), p_(p), pivot_row_(n, -1) {}
  // Reduces v in place; returns true if v was independent (and inserts it).
  bool insert(DenseVec v);
  bool contains(DenseVec v) const;
  void reduce(DenseVec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<DenseVec>& rows() const { return rows_; }

 private:
  int n_;
  fp_t p_;
  std::vector<int> pivot_row_;
  std::vector<int> pivot_of_;
  std::vector<DenseVec> rows_;
};

// Basis of the kernel of m (as dense vectors in F_p^cols), deterministic.
std::vector<DenseVec> kernel_basis(const SparseMat& m, fp_t p);
// Vectors from `candidates` (in order) that are independent modulo `sub`.
std::vector<DenseVec> complement(const Echelon& sub, const std::vector<DenseVec>& candidates);
// Solves A x = b for square invertible A given by columns; throws if singular.
std::vector<DenseVec> invert(const std::vector<DenseVec>& cols, fp_t p);

}  // namespace pdg

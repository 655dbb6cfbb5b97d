// Tensor products Sym(B_1) (x) ... (x) Sym(B_m) of symmetric polynomials in
// disjoint blocks of variables, written in products of Schur polynomials.
// Divided differences between neighbouring blocks have a closed form in this
// basis, which is what makes the Grassmannian computations polynomial-free.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pdg/symfunc.hpp"

namespace pdg {

class BlockSym {
 public:
  using Key = std::vector<Partition>;
  using Terms = std::map<Key, fp_t>;

  BlockSym() = default;
  BlockSym(fp_t p, std::vector<int> sizes) : p_(p), sizes_(std::move(sizes)) {}
  static BlockSym one(fp_t p, const std::vector<int>& sizes);
  static BlockSym term(fp_t p, const std::vector<int>& sizes, const Key& k, long c = 1);

  fp_t p() const { return p_; }
  const std::vector<int>& sizes() const { return sizes_; }
  int blocks() const { return static_cast<int>(sizes_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Terms with too many rows in some block vanish.
  void add_term(const Key& k, long c);
  void add_term_fp(const Key& k, fp_t c);

  BlockSym& operator+=(const BlockSym& o);
  BlockSym& operator-=(const BlockSym& o);
  BlockSym scaled(long c) const;
  bool operator==(const BlockSym& o) const { return p_ == o.p_ && sizes_ == o.sizes_ && terms_ == o.terms_; }

 private:
  fp_t p_ = 2;
  std::vector<int> sizes_;
  Terms terms_;
};

int key_degree(const BlockSym::Key& k);

// Multiply block k by pi_nu.
BlockSym mult_block(const BlockSym& f, int k, const Partition& nu);
BlockSym mult(const BlockSym& f, const BlockSym& g);
// g symmetric in the union of blocks first .. first+count-1, as an element of the block tensor.
BlockSym embed(const SchurPoly& g, const std::vector<int>& sizes, int first, int count);
// Replace block k by two blocks of c and d variables (c + d = sizes[k]).
BlockSym split_block(const BlockSym& f, int k, int c, int d);

// Divided difference for the longest minimal coset representative that moves
// the c variables of one block past the d variables of the next:
// pi_alpha(X) pi_beta(X') maps to a signed Schur polynomial in X u X'.
std::optional<std::pair<long, Partition>> pushforward(const Partition& alpha, int c, const Partition& beta, int d);
// Apply pushforward to blocks k, k+1; the two blocks merge.
BlockSym merge_push(const BlockSym& f, int k);
// merge_push followed by splitting back: the block-interchange divided difference
// as an endomorphism of the block tensor.
BlockSym block_crossing(const BlockSym& f, int k);
// Sum over blocks of the box-adding rule with content + twist[k] on block k:
// the differential d(x) = x^2 plus sum_k twist[k] e_1(B_k).
BlockSym block_diff(const BlockSym& f, const std::vector<long>& twist);

// Basis of Sym(B_1) (x) ... (x) Sym(B_m) over Sym_N (N = total number of
// variables): products prod_j pi_{l_j}(R_{j+1}) with R_j = B_j u ... u B_m and
// l_j in P(|R_{j+1}|, |B_j|).
struct Tower {
  fp_t p = 2;
  std::vector<int> sizes;
  int N = 0;
  std::vector<BlockSym::Key> basis;  // basis[i][j] = l_j, j = 0..m-2
  std::vector<int> degree;           // 2 sum |l_j|
  std::map<BlockSym::Key, int> index;

  BlockSym element(int i) const;
  // Coefficients c_i in Sym_N with f = sum_i c_i * element(i).
  std::vector<SchurPoly> decompose(const BlockSym& f) const;
};

Tower make_tower(fp_t p, const std::vector<int>& sizes);

}  // namespace pdg

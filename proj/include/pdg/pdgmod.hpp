// Grassmannian modules S_{a,b}, their endomorphism p-DG algebras as matrix
// algebras over Sym_N, thick crossings and dots, and the nilHecke algebra
// realized as END_{Sym_n}(Pol_n).
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdg/blocksym.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/poly.hpp"
#include "pdg/symfunc.hpp"

namespace pdg {

// Square matrix with entries in Sym_N over F_p, row-major.
class PDGMatrix {
 public:
  PDGMatrix() = default;
  PDGMatrix(fp_t p, int N, int m);
  static PDGMatrix identity(fp_t p, int N, int m);
  static PDGMatrix elementary(fp_t p, int N, int m, int i, int j);

  int size() const { return m_; }
  fp_t p() const { return p_; }
  int nvars() const { return N_; }
  SchurPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * m_ + j]; }
  const SchurPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * m_ + j]; }
  bool is_zero() const;
  bool is_constant() const;  // every entry has degree 0

  PDGMatrix operator+(const PDGMatrix& o) const;
  PDGMatrix operator-(const PDGMatrix& o) const;
  PDGMatrix operator*(const PDGMatrix& o) const;
  PDGMatrix scaled(long c) const;
  PDGMatrix truncated(int cap) const;
  bool operator==(const PDGMatrix& o) const { return m_ == o.m_ && e_ == o.e_; }
  // Row-major dump, one nonzero entry per line: "i j poly".
  std::string str() const;

 private:
  void check(const PDGMatrix& o) const;
  fp_t p_ = 2;
  int N_ = 0;
  int m_ = 0;
  std::vector<SchurPoly> e_;
};

// A free Sym_N-module with homogeneous basis and differential
// d(b_j) = sum_i D(i,j) b_i, together with its endomorphism algebra.
struct EndAlgebra {
  fp_t p = 2;
  int N = 0;
  std::vector<int> degree;  // degrees of the module basis
  PDGMatrix D;
  std::optional<int> cap;   // truncation of entry degrees, if any
  std::string label;

  int size() const { return static_cast<int>(degree.size()); }
  // Entrywise d plus D T - T D.
  PDGMatrix diff(const PDGMatrix& t) const;
  // Degree of T if all nonzero entries match one shift, nullopt otherwise (or zero).
  std::optional<int> homogeneous_degree(const PDGMatrix& t) const;
};

struct GrassModule {
  int a = 0, b = 0;
  fp_t p = 2;
  std::vector<Partition> basis;  // P(b, a): labels of pi_l(x') v
  int generator_degree = 0;      // -ab
  std::vector<int> degree;       // 2|l| - ab
  PDGMatrix diff_matrix;         // entries in Sym_{a+b}
};

// d(v) = -a e_1(x') v; the matrix is obtained by decomposing d(pi_l(x') v)
// over Sym_{a+b}. Throws if cap is given and smaller than the top basis degree.
GrassModule grass_module(int a, int b, fp_t p, std::optional<int> cap = std::nullopt);
// Graded rank over Sym_{a+b}: basis degree d contributes v^d.
std::map<int, long> grass_graded_rank(const GrassModule& g);

// Size guard: C(a+b, b) <= 400.
EndAlgebra end_algebra(int a, int b, fp_t p, std::optional<int> cap = std::nullopt);

// Matrix of a Sym_N-linear operator on the tower basis.
PDGMatrix operator_matrix(const Tower& t, const std::function<BlockSym(const BlockSym&)>& op);
// End algebra of the block tensor with differential d + sum_k twist[k] e_1(B_k).
EndAlgebra tower_end_algebra(const Tower& t, const std::vector<long>& twist, const std::string& label);

// d_w(pi_l(x) pi_m(x')) for l in P(a, b), m in P(b, a), |l| + |m| = ab:
// a scalar in {-1, 0, 1}.
long pairing(const Partition& l, const Partition& m, int a, int b);
// Pairing is +-1 exactly on complementary pairs, with sign kPairingSign * (-1)^{|m|}.
constexpr long kPairingSign = 1;
bool pairing_check(int a, int b, std::string* why = nullptr);

// Application order of divided differences for the block interchange of c
// variables past d variables starting at variable `first` (1-based indices).
std::vector<int> staircase_word(int c, int d, int first = 1);
PolElem apply_word(const std::vector<int>& word, const PolElem& f);
// Schur polynomial in the variables first..first+count-1 (zero-based) of Pol_n.
PolElem schur_pol(const Partition& l, int n, fp_t p, int first, int count);

// Block interchange d_w on S_{a,b} = Sym_a (x) Sym_b as a matrix in the Grassmannian basis.
PDGMatrix thick_crossing(int a, int b, fp_t p);

// S_{(p^a)} = Sym_p^{(x) a} over Sym_{ap}.
struct ThickContext {
  int a = 0;
  fp_t p = 2;
  Tower tower;
  EndAlgebra alg;
};
// Guard: a * p <= 6.
ThickContext thick_context(int a, fp_t p);

enum class NHGen { Dot, Crossing };
// dot_k: multiplication by e_p(B_k)^p; crossing_k: interchange of blocks k, k+1.
PDGMatrix theta_plus(NHGen g, int k, const ThickContext& ctx);

// The module V of a free module with constant differential, as a finite p-complex.
PComplex module_complex(const EndAlgebra& alg);
// END as a p-complex, basis E_ij pi_nu in degrees <= hi (exact below).
struct EndComplex {
  PComplex cx;
  // Position of E_ij pi_nu inside its degree, -1 if outside the window.
  int index_of(int i, int j, const Partition& nu) const;
  DenseVec vector_of(const PDGMatrix& t, int degree) const;
  std::map<int, std::map<std::pair<int, int>, int>> offsets;  // degree -> (i,j) -> start
  std::vector<int> degree;                                    // module degrees
  int N = 0;
};
EndComplex end_complex(const EndAlgebra& alg, int hi);
// Slash cohomology of END = Sym_N (x) V (x) V^* when D is constant, with Sym_N
// capped at sym_cap.
std::vector<GradedDims> end_slash_dims(const EndAlgebra& alg, int sym_cap);

// (sum_u t^{d_u})(sum_u t^{-d_u}) / prod_{j=1}^{count} (1 - t^{step*j}) on [lo, hi].
GradedDims matrix_series(const std::vector<int>& basis_degrees, int count, int step, int lo, int hi);

struct SubCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ThickReport {
  int a = 0;
  fp_t p = 2;
  int sym_cap = 0;
  std::vector<SubCheck> checks;  // crossing^2, braid, dot-slide, graded dims
  bool ok() const;
};
ThickReport thick_nilhecke_check(int a, fp_t p, int sym_cap);

struct AcyclicityReport {
  bool ok = true;
  bool valid = true;          // d^p = 0 on the window
  int cap = 0;
  std::vector<GradedDims> slash;
  std::string detail;
};
// NH_p as END_{Sym_p}(Pol_p). twisted = false uses the plain commutator with
// d(x_i) = x_i^2; twisted = true adds sum_i (i-1) x_i to the Pol_p differential.
AcyclicityReport nh_acyclicity_check(fp_t p, int cap, bool twisted = true);

struct FormalityReport {
  bool ok = true;
  int sym_cap = 0;
  int lo = 0, hi = 0;  // compared degree range
  std::vector<GradedDims> slash;
  GradedDims expected;
  std::string detail;
};
// H_/(END(S_{ap,bp})) against a C(a+b,a)-square matrix algebra over
// k[e_p^p, ..., e_{(a+b)p}^p] with the p-Lima class degrees.
FormalityReport formality_check(int a, int b, fp_t p, int sym_cap);

}  // namespace pdg

// Symmetric polynomials over F_p in the Schur basis, the differential
// d(x_i) = x_i^2 in that basis, and the complexes built from it.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdg/linalg.hpp"
#include "pdg/pcomplex.hpp"

namespace pdg {

// Weakly decreasing positive parts; {} is the empty partition.
using Partition = std::vector<int>;

int size(const Partition& l);
Partition transpose(const Partition& l);
bool is_partition(const Partition& l);
// At most `rows` rows and every part at most `cols`.
bool fits_in(const Partition& l, int rows, int cols);
bool contains(const Partition& big, const Partition& small);
std::string to_string(const Partition& l);

// Graded by size, then lexicographically decreasing within a size.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

// Partitions of m with at most max_rows rows and parts at most max_part
// (negative bounds mean unbounded), in PartitionOrder.
std::vector<Partition> partitions(int m, int max_rows = -1, int max_part = -1);
// The rectangle-bounded set P(rows, cols), in PartitionOrder.
std::vector<Partition> partitions_in_box(int rows, int cols);
// Complement of l in the rows x cols rectangle, then transposed: lies in P(cols, rows).
Partition complement_transpose(const Partition& l, int rows, int cols);
// Each box of nu blown up to a p x p square.
Partition lima_expand(const Partition& nu, int p);
// LP(bp, ap) = expansions of P(b, a).
std::vector<Partition> lima_partitions(int b, int a, int p);

// Integer Littlewood-Richardson product of two Schur functions, keeping only
// partitions with at most max_rows rows (max_rows < 0: unbounded). Memoized.
const std::map<Partition, long, PartitionOrder>& lr_product(const Partition& l, const Partition& m, int max_rows);
long lr_coefficient(const Partition& l, const Partition& m, const Partition& nu);

class SchurPoly {
 public:
  using Terms = std::map<Partition, fp_t, PartitionOrder>;

  SchurPoly() = default;
  SchurPoly(fp_t p, std::optional<int> n) : p_(p), n_(n) {}
  static SchurPoly schur(fp_t p, std::optional<int> n, const Partition& l, long c = 1);
  static SchurPoly one(fp_t p, std::optional<int> n) { return schur(p, n, {}); }

  fp_t p() const { return p_; }
  std::optional<int> n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  fp_t coeff(const Partition& l) const;
  void add_term(const Partition& l, long c);

  SchurPoly& operator+=(const SchurPoly& o);
  SchurPoly& operator-=(const SchurPoly& o);
  SchurPoly operator+(const SchurPoly& o) const;
  SchurPoly operator-(const SchurPoly& o) const;
  SchurPoly operator-() const;
  SchurPoly scaled(long c) const;
  bool operator==(const SchurPoly& o) const { return p_ == o.p_ && n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const SchurPoly& o) const { return !(*this == o); }
  // Drop terms of degree 2|l| > cap.
  SchurPoly truncated(int cap) const;
  // Text form coef*s[l1,l2,...] joined by +.
  std::string str() const;
  static SchurPoly parse(const std::string& s, fp_t p, std::optional<int> n);

 private:
  void check_compatible(const SchurPoly& o) const;
  fp_t p_ = 2;
  std::optional<int> n_;
  Terms terms_;
};

SchurPoly mult(const SchurPoly& f, const SchurPoly& g);
SchurPoly power(const SchurPoly& f, int k);
SchurPoly elementary(int r, fp_t p, std::optional<int> n);
SchurPoly complete(int r, fp_t p, std::optional<int> n);
// Box-adding rule with coefficients content + shift (shift 0 is the differential).
SchurPoly box_diff(const SchurPoly& f, long shift);
SchurPoly diff(const SchurPoly& f);
SchurPoly twisted_diff(const SchurPoly& f, long a);
SchurPoly omega(const SchurPoly& f);

// Element of Sym_a (x) Sym_b.
using SchurTensor = std::map<std::pair<Partition, Partition>, fp_t>;
SchurTensor split_vars(const SchurPoly& f, int a, int b);

// Formal polynomial in e'_1, e'_2, ...: exponent vector -> coefficient.
using EPrimePoly = std::map<std::vector<int>, long>;
SchurPoly theta0(const EPrimePoly& g, fp_t p, std::optional<int> n);

// A p-complex whose basis in each degree is a list of partitions.
struct SchurComplex {
  PComplex cx;
  std::map<int, std::vector<Partition>> basis;
  int index_of(const Partition& l) const;  // position inside its degree, -1 if absent
  DenseVec vector_of(const SchurPoly& f, int degree) const;
};

// Basis: partitions with <= rows rows (rows < 0: unbounded) and parts <= cols
// (cols < 0: unbounded), degree 2|l| <= cap when cap is given. Differential is
// the box-adding rule with coefficient content + shift. A finite cap makes the
// complex truncated above; rows and cols bounds are exact.
SchurComplex box_complex(fp_t p, int rows, int cols, long shift, std::optional<int> cap);

enum class SymSource { Sym, Twisted, Vab, Vi };
struct SymParams {
  int n = 1;     // Sym_n, S_n(a)
  long a = 0;    // twist for S_n(a); a in V_{a,b}
  int b = 0;     // b in V_{a,b}
  int i = 1;     // V_i
  int k = 1;     // V_i lives on P(i, kp - i)
};
// Throws std::invalid_argument if the window leaves no valid degree.
SchurComplex as_pcomplex(SymSource src, fp_t p, const SymParams& prm, std::optional<int> cap);

}  // namespace pdg

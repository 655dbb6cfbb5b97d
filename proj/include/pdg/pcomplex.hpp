// Graded p-complexes over F_p on a (possibly truncated) degree window,
// slash cohomology, string (Jordan) decompositions and tensor products.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdg/linalg.hpp"

namespace pdg {

// Graded dimensions valid on [lo, hi]; a missing bound means the values are
// known on that whole side. Degrees absent from `dims` inside the window are 0.
struct GradedDims {
  std::optional<int> lo, hi;
  std::map<int, long> dims;

  bool in_window(int d) const { return (!lo || d >= *lo) && (!hi || d <= *hi); }
  long at(int d) const;  // throws std::out_of_range outside the window
  void add(int d, long n);
  std::string str() const;
};

// Dimensions agree on every degree inside both windows and in [from, to].
bool dims_agree(const GradedDims& a, const GradedDims& b, int from, int to, std::string* why = nullptr);

// A p-complex stored degree by degree. d[s] maps U_s to U_{s+2}. The bounds lo
// and hi record truncation: if hi is set, degrees above hi were dropped (so the
// stored object is the quotient by them); if lo is set, degrees below lo were
// dropped (the stored object is a subcomplex). Unset bounds mean nothing was
// dropped on that side.
struct PComplex {
  fp_t p = 2;
  std::optional<int> lo, hi;
  std::map<int, int> dims;
  std::map<int, SparseMat> d;

  PComplex() = default;
  explicit PComplex(fp_t prime) : p(prime) {}

  int dim(int s) const;
  int total_dim() const;
  int min_deg() const;
  int max_deg() const;
  bool empty() const { return dims.empty(); }
  // Zero matrix of the right shape if no differential is stored.
  SparseMat diff(int s) const;
  // d^j : U_s -> U_{s+2j}.
  SparseMat power(int s, int j) const;
  void set_dim(int s, int n);
  void set_diff(int s, SparseMat m);
  // Valid window for slash cohomology.
  std::optional<int> valid_lo() const;
  std::optional<int> valid_hi() const;
  bool valid(int s) const;
};

struct Validation {
  bool ok = true;
  std::string message;
  int degree = 0;
  int index = -1;
};

Validation validate(const PComplex& c);

struct SlashCohomology {
  fp_t p = 2;
  std::vector<GradedDims> dims;  // indexed by k = 0..p-2
  // reps[k][degree]: cocycle representatives in the basis of that degree.
  std::vector<std::map<int, std::vector<DenseVec>>> reps;
};

// Quotient computation with explicit representatives (dense; small complexes).
SlashCohomology slash_cohomology(const PComplex& c);
// Dimensions only, from ranks of powers of d (sparse; large complexes).
std::vector<GradedDims> slash_dims(const PComplex& c);

struct PString {
  int head = 0;    // degree of the first vector
  int length = 0;  // number of vectors
  std::vector<DenseVec> vecs;  // vecs[i] lives in degree head + 2i
  bool exact = true;  // false if truncation could have altered this string
  int end() const { return head + 2 * (length - 1); }
};

std::vector<PString> string_decompose(const PComplex& c);
// Counts of strings by (length, head), computed from ranks only.
std::map<std::pair<int, int>, long> string_counts(const PComplex& c);

PComplex string_complex(fp_t p, int length, int head = 0);
PComplex shift(const PComplex& c, int k);
PComplex direct_sum(const PComplex& a, const PComplex& b);
PComplex tensor(const PComplex& a, const PComplex& b);
// Graded dual of a finite complex: degrees negated, differential minus the transpose.
PComplex dual(const PComplex& c);

// Slash cohomology dimensions of a (x) w for a finite complex w, computed
// summand by summand over the string decomposition of w.
std::vector<GradedDims> slash_dims_tensor(const PComplex& a, const PComplex& w);

enum class KunnethStatus { Holds, Fails, PreconditionFailed };
struct KunnethResult {
  KunnethStatus status = KunnethStatus::Holds;
  std::string detail;
  int degrees_compared = 0;
};
KunnethResult kunneth_check(const PComplex& a, const PComplex& m);

GradedDims hilbert(const PComplex& c);
GradedDims hilbert(const SlashCohomology& h);
GradedDims total(const std::vector<GradedDims>& parts);

// Whether v (a vector in degree s) lies in the image of d^power.
bool in_image(const PComplex& c, int s, const DenseVec& v, int power);

}  // namespace pdg

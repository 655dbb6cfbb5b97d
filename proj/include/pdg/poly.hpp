// Pol_n = F_p[x_1..x_n] with deg x_i = 2 and d(x_i) = x_i^2, divided
// differences, and linear operators stored on a finite degree window.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pdg/linalg.hpp"

namespace pdg {

// Exponent vectors packed 8 bits per variable; at most 8 variables.
using MonoKey = std::uint64_t;
constexpr int kMaxVars = 8;

int mono_exp(MonoKey k, int i);
MonoKey mono_set(MonoKey k, int i, int e);
int mono_total(MonoKey k, int n);
// All exponent vectors of total degree m in n variables (lex decreasing).
std::vector<MonoKey> monomials(int n, int m);

class PolElem {
 public:
  using Terms = std::map<MonoKey, fp_t>;

  PolElem() = default;
  PolElem(int n, fp_t p);
  static PolElem constant(int n, fp_t p, long c);
  static PolElem var(int n, fp_t p, int i);  // x_{i+1}, zero-based index
  static PolElem monomial(int n, fp_t p, const std::vector<int>& exps, long c = 1);

  int n() const { return n_; }
  fp_t p() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(MonoKey k, fp_t c);
  fp_t coeff(MonoKey k) const;

  PolElem& operator+=(const PolElem& o);
  PolElem& operator-=(const PolElem& o);
  PolElem operator+(const PolElem& o) const;
  PolElem operator-(const PolElem& o) const;
  PolElem operator*(const PolElem& o) const;
  PolElem scaled(long c) const;
  bool operator==(const PolElem& o) const { return n_ == o.n_ && p_ == o.p_ && terms_ == o.terms_; }
  // Swap x_i and x_{i+1} (zero-based i).
  PolElem swapped(int i) const;
  std::string str() const;

 private:
  int n_ = 0;
  fp_t p_ = 2;
  Terms terms_;
};

// d(x_i) = x_i^2 extended as a derivation.
PolElem pol_diff(const PolElem& f);
// Divided difference (f - s_i f)/(x_i - x_{i+1}) for 1 <= i <= n-1, by exact
// long division; throws std::logic_error on a nonzero remainder.
PolElem demazure(int i, const PolElem& f);
// Same operator from the closed formula on monomials.
PolElem demazure_fast(int i, const PolElem& f);

// A homogeneous linear operator on Pol_n, known on monomials of degree <= max_deg
// (degree counted with deg x_i = 2) and shifting degree by `shift`.
class OperatorOnWindow {
 public:
  OperatorOnWindow() = default;
  static OperatorOnWindow from_function(int n, fp_t p, int shift, int max_deg,
                                        const std::function<PolElem(const PolElem&)>& f);
  static OperatorOnWindow identity(int n, fp_t p, int max_deg);

  int n() const { return n_; }
  fp_t p() const { return p_; }
  int shift() const { return shift_; }
  int max_deg() const { return max_deg_; }
  // Throws std::out_of_range if f has a term above the window.
  PolElem apply(const PolElem& f) const;
  // Image of a basis monomial.
  const PolElem& image(MonoKey k) const;

  friend OperatorOnWindow compose(const OperatorOnWindow& a, const OperatorOnWindow& b);
  OperatorOnWindow operator+(const OperatorOnWindow& o) const;
  OperatorOnWindow operator-(const OperatorOnWindow& o) const;
  OperatorOnWindow scaled(long c) const;
  // Equal on every monomial of degree <= min(max_deg) of the two.
  bool equals(const OperatorOnWindow& o, std::string* why = nullptr) const;
  bool is_zero() const;
  // Number of source monomials compared by equals/is_zero.
  long window_size() const;

 private:
  int n_ = 0;
  fp_t p_ = 2;
  int shift_ = 0;
  int max_deg_ = 0;
  std::map<MonoKey, PolElem> images_;
};

// a o b, defined on source degrees where b's image stays inside a's window.
OperatorOnWindow compose(const OperatorOnWindow& a, const OperatorOnWindow& b);

struct RelationReport {
  bool ok = true;
  std::string failure;  // first failing relation
  int window = 0;       // source degrees compared: 0..window
  long monomials_checked = 0;
};

// d_i^2 = 0, the braid relation, and x_i d_i - d_i x_{i+1} = 1 = d_i x_i - x_{i+1} d_i,
// as operators on Pol_n up to degree `window`.
RelationReport nilhecke_relations_check(int n, fp_t p, int window);

// Commutator d o T - T o d with the differential of Pol_n.
OperatorOnWindow nh_differential(const OperatorOnWindow& t);

}  // namespace pdg

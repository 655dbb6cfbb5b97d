// Laurent polynomials over Z, the ring O_p = Z[v^{+-1}]/(Psi_p(v^2)), quantum
// integers and binomials, and the base changes between them.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace pdg {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(int exp, const mpz_class& c = 1);

  const std::map<int, mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int e) const;
  bool is_zero() const { return c_.empty(); }
  int min_exp() const;
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shift(int k) const;  // multiply by v^k
  LaurentPoly bar() const;         // v -> v^{-1}
  mpz_class at_one() const;
  // Exact division; throws std::domain_error if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& d) const;
  std::string str() const;

 private:
  void add_term(int e, const mpz_class& c);
  std::map<int, mpz_class> c_;
};

LaurentPoly qint(long n);
LaurentPoly qfactorial(long n);
// Memoized Pascal recursion; safe for concurrent use.
LaurentPoly qbinom(long m, long k);

// Element of O_p in the Z-basis 1, q, ..., q^{2p-3}.
class CycElem {
 public:
  CycElem() = default;
  explicit CycElem(int p);
  CycElem(int p, long c);
  static CycElem q_pow(int p, long e);
  static CycElem from_coeffs(int p, std::vector<mpz_class> c);

  int p() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;

  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem operator+(const CycElem& o) const;
  CycElem operator-(const CycElem& o) const;
  CycElem operator-() const;
  CycElem operator*(const CycElem& o) const;
  CycElem operator*(long k) const;
  bool operator==(const CycElem& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycElem& o) const { return !(*this == o); }
  // Re-reduces the stored vector; a no-op on canonical elements.
  CycElem canonical() const;
  std::string str() const;

 private:
  void add_q_pow(long e, const mpz_class& c);
  int p_ = 2;
  std::vector<mpz_class> c_;
};

CycElem to_Op(const LaurentPoly& f, int p);
CycElem rho(const LaurentPoly& f, int p);
bool binom_reduction_check(int a, int b, int p);

enum class CycloTarget { TwoP, P };

// Element of Z[v]/(Psi_m(v)) for m = 2p or p; coefficients of 1, v, ..., v^{p-2}.
struct CycloVec {
  int order = 0;
  std::vector<mpz_class> c;
  bool operator==(const CycloVec& o) const { return order == o.order && c == o.c; }
  std::string str() const;
};

// Throws std::domain_error for (p = 2, CycloTarget::P): 1 + v^2 is not divisible by Psi_2.
CycloVec varrho(const CycElem& x, CycloTarget target);
bool is_prime(long n);

}  // namespace pdg

// Idempotented quantum sl2 over Z[v^{+-1}] and over O_p (base changes v -> q
// and v -> q^{p^2}), its positive half, the canonical basis, and the quantum
// Frobenius map with its basis-wise section.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pdg/cyclotomic.hpp"

namespace pdg {

enum class RingTag { Generic, Op, Rho };

struct Ring {
  RingTag tag = RingTag::Generic;
  int p = 0;  // unused for Generic
  static Ring generic() { return {}; }
  static Ring op(int p) { return {RingTag::Op, p}; }
  static Ring rho(int p) { return {RingTag::Rho, p}; }
  bool operator==(const Ring& o) const { return tag == o.tag && (tag == RingTag::Generic || p == o.p); }
  bool operator!=(const Ring& o) const { return !(*this == o); }
  std::string str() const;
};

// A scalar in Z[v^{+-1}] (Generic) or in O_p (Op, Rho).
class Coef {
 public:
  Coef() = default;
  explicit Coef(Ring r);
  Coef(Ring r, long c);
  // Image of f under the structure map of the ring: identity, v -> q, or rho.
  static Coef from_laurent(const LaurentPoly& f, Ring r);

  const Ring& ring() const { return ring_; }
  const LaurentPoly& laurent() const { return lp_; }
  const CycElem& cyc() const { return ce_; }
  bool is_zero() const;
  // Same value with a different tag over the same p (both non-generic).
  Coef retagged(Ring r) const;

  Coef& operator+=(const Coef& o);
  Coef operator+(const Coef& o) const;
  Coef operator-(const Coef& o) const;
  Coef operator-() const;
  Coef operator*(const Coef& o) const;
  bool operator==(const Coef& o) const;
  bool operator!=(const Coef& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void check(const Coef& o) const;
  Ring ring_;
  LaurentPoly lp_;
  CycElem ce_;
};

// Positive half: sum of c_a E^{(a)}.
class HalfElem {
 public:
  HalfElem() = default;
  explicit HalfElem(Ring r) : ring_(r) {}
  static HalfElem divided_power(Ring r, long a, long c = 1);

  const Ring& ring() const { return ring_; }
  const std::map<long, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(long a, const Coef& c);
  HalfElem operator+(const HalfElem& o) const;
  bool operator==(const HalfElem& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const HalfElem& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Ring ring_;
  std::map<long, Coef> terms_;
};

HalfElem half_mult(const HalfElem& x, const HalfElem& y);
// r(E^{(a)}) = sum_k v^{k(k-a)} E^{(k)} (x) E^{(a-k)}.
std::map<std::pair<long, long>, Coef> half_comult(const HalfElem& x);
// E^{(a)} -> E^{(a/p)} if p | a, else 0; O_p to Rho.
HalfElem half_frobenius(const HalfElem& x);

enum class Shape { EF, FE };

// E^{(a)}F^{(b)}1_n or F^{(b)}E^{(a)}1_n.
struct CBWord {
  Shape shape = Shape::EF;
  long a = 0, b = 0, n = 0;

  // Canonical basis element: EF needs n <= b-a, FE needs n > b-a.
  bool canonical() const;
  // The unique canonical word with these parameters.
  static CBWord basis(long a, long b, long n);
  long source() const { return n; }
  long target() const { return n + 2 * a - 2 * b; }
  std::string str() const;  // E(a)F(b)1[n] or F(b)E(a)1[n]
  auto key() const { return std::tuple(static_cast<int>(shape), a, b, n); }
  bool operator<(const CBWord& o) const { return key() < o.key(); }
  bool operator==(const CBWord& o) const { return key() == o.key(); }
};

class UdotElem {
 public:
  using Terms = std::map<CBWord, Coef>;

  UdotElem() = default;
  explicit UdotElem(Ring r) : ring_(r) {}
  // Any word, canonical or not, rewritten into the canonical basis.
  static UdotElem word(Ring r, Shape s, long a, long b, long n, long c = 1);
  static UdotElem idem(Ring r, long n) { return word(r, Shape::EF, 0, 0, n); }
  static UdotElem E(Ring r, long a, long n) { return word(r, Shape::EF, a, 0, n); }
  static UdotElem F(Ring r, long b, long n) { return word(r, Shape::EF, 0, b, n); }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const CBWord& w, const Coef& c);  // w must be canonical
  UdotElem& operator+=(const UdotElem& o);
  UdotElem operator+(const UdotElem& o) const;
  UdotElem operator-(const UdotElem& o) const;
  UdotElem scaled(const Coef& c) const;
  bool operator==(const UdotElem& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const UdotElem& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Ring ring_;
  Terms terms_;
};

// [m choose j] for any integer m and j >= 0.
LaurentPoly qbinom_general(long m, long j);
// Product of two canonical words as generic structure constants.
std::map<CBWord, LaurentPoly> word_product(const CBWord& x, const CBWord& y);
UdotElem udot_mult(const UdotElem& x, const UdotElem& y);

UdotElem frobenius(const UdotElem& x);
UdotElem frobenius_section(const UdotElem& x);

// Brute-force oracle over Q(v): expands undivided words with theta vartheta 1_n
// = vartheta theta 1_n + [n] 1_n only, and compares x*y against udot_mult after
// clearing quantum factorial denominators.
bool oracle_agrees(const CBWord& x, const CBWord& y, std::string* why = nullptr);

struct UdotRange {
  long max_ab = 0;  // 0 <= a, b <= max_ab
  long max_n = 0;   // |n| <= max_n
};
std::vector<CBWord> canonical_words(const UdotRange& r);

struct QCheckReport {
  bool ok = true;
  long cases = 0;
  std::string counterexample;  // first failure
};

QCheckReport frobenius_hom_check(int p, const UdotRange& r, int jobs = 1);
QCheckReport kernel_check(int p, const UdotRange& r, int jobs = 1);
QCheckReport section_check(int p, const UdotRange& r);
QCheckReport oracle_check(const UdotRange& r, int jobs = 1);

struct K0Report {
  bool ok = false;
  CycElem euler;          // sum of q^d dim V^d over the whole complex
  CycElem slash_char;     // sum of q^d dim H_/0^d
  CycElem literal;        // q^{-abp^2} * slash_char
  CycElem reduced_binom;  // q^{-abp^2} * [(a+b)p choose ap] in O_p
  long binomial = 0;
};
// K_0 shadow of m([S_ap] [S_bp]): the character of H_/(V_{a,b}) and the
// Euler character of V_{a,b} both equal C(a+b, a), and so does
// q^{-abp^2} [(a+b)p choose ap].
K0Report k0_symbol_report(int a, int b, int p);
bool k0_symbol_check(int a, int b, int p);

}  // namespace pdg

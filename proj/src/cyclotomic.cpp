#include "pdg/cyclotomic.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace pdg {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
  LaurentPoly f;
  if (c != 0) f.c_[exp] = c;
  return f;
}

mpz_class LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r -= o;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  const int lo = min_exp() + o.min_exp();
  std::vector<mpz_class> acc(static_cast<std::size_t>(max_exp() + o.max_exp() - lo + 1));
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) mpz_addmul(acc[static_cast<std::size_t>(e1 + e2 - lo)].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  auto hint = r.c_.end();
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) hint = r.c_.emplace_hint(hint, static_cast<int>(i) + lo, std::move(acc[i]));
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  LaurentPoly rem = *this, quo;
  int dlead = d.max_exp();
  int dspan = dlead - d.min_exp();
  const mpz_class& dc = d.c_.rbegin()->second;
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < dspan)
      throw std::domain_error("divide_exact: nonzero remainder");
    const mpz_class& rc = rem.c_.rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw std::domain_error("divide_exact: nonzero remainder");
    LaurentPoly term = monomial(rem.max_exp() - dlead, rc / dc);
    quo += term;
    rem -= term * d;
  }
  return quo;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly qint(long n) {
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (long i = 0; i < n; ++i) r += LaurentPoly::monomial(static_cast<int>(n - 1 - 2 * i));
  return r;
}

LaurentPoly qfactorial(long n) {
  LaurentPoly r(1);
  for (long i = 2; i <= n; ++i) r = r * qint(i);
  return r;
}

namespace {
std::shared_mutex g_binom_mu;
std::map<std::pair<long, long>, LaurentPoly> g_binom_memo;
}  // namespace

LaurentPoly qbinom(long m, long k) {
  if (k < 0 || k > m) throw std::invalid_argument("qbinom: need 0 <= k <= m");
  if (k == 0 || k == m) return LaurentPoly(1);
  {
    std::shared_lock lock(g_binom_mu);
    auto it = g_binom_memo.find({m, k});
    if (it != g_binom_memo.end()) return it->second;
  }
  LaurentPoly r = qbinom(m - 1, k).shift(static_cast<int>(k)) +
                  qbinom(m - 1, k - 1).shift(static_cast<int>(k - m));
  std::unique_lock lock(g_binom_mu);
  g_binom_memo.emplace(std::make_pair(m, k), r);
  return r;
}

CycElem::CycElem(int p) : p_(p), c_(2 * (p - 1)) {
  if (!is_prime(p)) throw std::invalid_argument("CycElem: p must be prime");
}

CycElem::CycElem(int p, long c) : CycElem(p) { c_[0] = c; }

CycElem CycElem::q_pow(int p, long e) {
  CycElem r(p);
  r.add_q_pow(e, 1);
  return r;
}

CycElem CycElem::from_coeffs(int p, std::vector<mpz_class> c) {
  CycElem r(p);
  for (std::size_t i = 0; i < c.size(); ++i) r.add_q_pow(static_cast<long>(i), c[i]);
  return r;
}

void CycElem::add_q_pow(long e, const mpz_class& c) {
  if (c == 0) return;
  long m = 2L * p_;
  long r = ((e % m) + m) % m;
  long rank = 2L * (p_ - 1);
  if (r < rank) {
    c_[r] += c;
  } else if (r == m - 2) {
    // q^{2p-2} = -(1 + q^2 + ... + q^{2p-4})
    for (long i = 0; i < rank; i += 2) c_[i] -= c;
  } else {
    // q^{2p-1} = -(q + q^3 + ... + q^{2p-3})
    for (long i = 1; i < rank; i += 2) c_[i] -= c;
  }
}

bool CycElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

CycElem& CycElem::operator+=(const CycElem& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycElem: mismatched p");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycElem: mismatched p");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycElem CycElem::operator+(const CycElem& o) const {
  CycElem r = *this;
  return r += o;
}

CycElem CycElem::operator-(const CycElem& o) const {
  CycElem r = *this;
  return r -= o;
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycElem CycElem::operator*(const CycElem& o) const {
  if (o.p_ != p_) throw std::invalid_argument("CycElem: mismatched p");
  CycElem r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r.add_q_pow(static_cast<long>(i + j), c_[i] * o.c_[j]);
  }
  return r;
}

CycElem CycElem::operator*(long k) const {
  CycElem r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

CycElem CycElem::canonical() const {
  return from_coeffs(p_, c_);
}

std::string CycElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (i != 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

CycElem to_Op(const LaurentPoly& f, int p) {
  CycElem acc(p);
  for (const auto& [e, c] : f.coeffs()) {
    CycElem t = CycElem::q_pow(p, e);
    std::vector<mpz_class> v = t.coeffs();
    for (auto& x : v) x *= c;
    acc += CycElem::from_coeffs(p, v);
  }
  return acc;
}

CycElem rho(const LaurentPoly& f, int p) {
  if (p == 2) return CycElem::from_coeffs(p, {f.at_one()});
  LaurentPoly g;
  for (const auto& [e, c] : f.coeffs()) g += LaurentPoly::monomial(e * p, c);
  return to_Op(g, p);
}

bool binom_reduction_check(int a, int b, int p) {
  if (a < 0 || b < 0) throw std::invalid_argument("binom_reduction_check: a, b >= 0");
  CycElem lhs = to_Op(qbinom(static_cast<long>(a + b) * p, static_cast<long>(a) * p), p);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), a + b, a);
  // q^{p^2 ab} agrees with q^{pab} for odd p and equals 1 for p = 2.
  CycElem rhs = CycElem::q_pow(p, static_cast<long>(p) * p * a * b) * CycElem::from_coeffs(p, {c});
  return lhs == rhs && lhs == rho(qbinom(a + b, a), p);
}

std::string CycloVec::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "] mod Psi_" << order;
  return os.str();
}

CycloVec varrho(const CycElem& x, CycloTarget target) {
  int p = x.p();
  if (p == 2 && target == CycloTarget::P)
    throw std::domain_error("varrho: Psi_2 does not divide 1 + v^2, no p-target for p = 2");
  int deg = (p == 2) ? 2 : p - 1;  // degree of the target cyclotomic polynomial
  // Monic modulus coefficients m[0..deg], m[deg] = 1.
  std::vector<long> m(deg + 1, 0);
  if (p == 2) {
    m = {1, 0, 1};  // Psi_4 = v^2 + 1
  } else {
    for (int i = 0; i <= deg; ++i) m[i] = (target == CycloTarget::P || i % 2 == 0) ? 1 : -1;
  }
  std::vector<mpz_class> poly = x.coeffs();
  for (int e = static_cast<int>(poly.size()) - 1; e >= deg; --e) {
    mpz_class lead = poly[e];
    if (lead == 0) continue;
    for (int i = 0; i <= deg; ++i) poly[e - deg + i] -= lead * m[i];
  }
  CycloVec out;
  out.order = (target == CycloTarget::P) ? p : 2 * p;
  out.c.assign(poly.begin(), poly.begin() + deg);
  return out;
}

}  // namespace pdg

#include "pdg/qgroup.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "pdg/pcomplex.hpp"
#include "pdg/symfunc.hpp"

namespace pdg {

std::string Ring::str() const {
  switch (tag) {
    case RingTag::Generic:
      return "Z[v,v^-1]";
    case RingTag::Op:
      return "O_" + std::to_string(p);
    case RingTag::Rho:
      return "O_" + std::to_string(p) + "(rho)";
  }
  return "?";
}

// ---------------------------------------------------------------- Coef

Coef::Coef(Ring r) : ring_(r) {
  if (r.tag != RingTag::Generic) ce_ = CycElem(r.p);
}

Coef::Coef(Ring r, long c) : ring_(r) {
  if (r.tag == RingTag::Generic)
    lp_ = LaurentPoly(c);
  else
    ce_ = CycElem(r.p, c);
}

Coef Coef::from_laurent(const LaurentPoly& f, Ring r) {
  Coef c(r);
  switch (r.tag) {
    case RingTag::Generic:
      c.lp_ = f;
      break;
    case RingTag::Op:
      c.ce_ = to_Op(f, r.p);
      break;
    case RingTag::Rho:
      c.ce_ = rho(f, r.p);
      break;
  }
  return c;
}

bool Coef::is_zero() const { return ring_.tag == RingTag::Generic ? lp_.is_zero() : ce_.is_zero(); }

Coef Coef::retagged(Ring r) const {
  if (ring_.tag == RingTag::Generic || r.tag == RingTag::Generic || r.p != ring_.p)
    throw std::invalid_argument("Coef::retagged: incompatible rings " + ring_.str() + " -> " + r.str());
  Coef c = *this;
  c.ring_ = r;
  return c;
}

void Coef::check(const Coef& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch: " + ring_.str() + " vs " + o.ring_.str());
}

Coef& Coef::operator+=(const Coef& o) {
  check(o);
  if (ring_.tag == RingTag::Generic)
    lp_ += o.lp_;
  else
    ce_ += o.ce_;
  return *this;
}

Coef Coef::operator+(const Coef& o) const {
  Coef r = *this;
  return r += o;
}

Coef Coef::operator-() const {
  Coef r = *this;
  if (ring_.tag == RingTag::Generic)
    r.lp_ = -lp_;
  else
    r.ce_ = -ce_;
  return r;
}

Coef Coef::operator-(const Coef& o) const { return *this + (-o); }

Coef Coef::operator*(const Coef& o) const {
  check(o);
  Coef r(ring_);
  if (ring_.tag == RingTag::Generic)
    r.lp_ = lp_ * o.lp_;
  else
    r.ce_ = ce_ * o.ce_;
  return r;
}

bool Coef::operator==(const Coef& o) const {
  if (ring_ != o.ring_) return false;
  return ring_.tag == RingTag::Generic ? lp_ == o.lp_ : ce_ == o.ce_;
}

std::string Coef::str() const { return ring_.tag == RingTag::Generic ? lp_.str() : ce_.str(); }

// ---------------------------------------------------------------- half

HalfElem HalfElem::divided_power(Ring r, long a, long c) {
  if (a < 0) throw std::invalid_argument("divided_power: negative exponent");
  HalfElem h(r);
  h.add_term(a, Coef(r, c));
  return h;
}

void HalfElem::add_term(long a, const Coef& c) {
  if (c.ring() != ring_) throw std::invalid_argument("HalfElem: ring mismatch");
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HalfElem HalfElem::operator+(const HalfElem& o) const {
  if (o.ring_ != ring_) throw std::invalid_argument("HalfElem: ring mismatch");
  HalfElem r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

std::string HalfElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*E(" << a << ")";
  }
  return os.str();
}

HalfElem half_mult(const HalfElem& x, const HalfElem& y) {
  if (x.ring() != y.ring()) throw std::invalid_argument("half_mult: ring mismatch");
  HalfElem r(x.ring());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add_term(a + b, ca * cb * Coef::from_laurent(qbinom(a + b, a), x.ring()));
  return r;
}

std::map<std::pair<long, long>, Coef> half_comult(const HalfElem& x) {
  std::map<std::pair<long, long>, Coef> out;
  for (const auto& [a, c] : x.terms()) {
    for (long k = 0; k <= a; ++k) {
      Coef t = c * Coef::from_laurent(LaurentPoly::monomial(static_cast<int>(k * (k - a))), x.ring());
      auto key = std::pair(k, a - k);
      auto it = out.find(key);
      if (it == out.end()) {
        if (!t.is_zero()) out.emplace(key, t);
      } else {
        it->second += t;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

HalfElem half_frobenius(const HalfElem& x) {
  if (x.ring().tag != RingTag::Op) throw std::invalid_argument("half_frobenius: expects an O_p element");
  Ring target = Ring::rho(x.ring().p);
  HalfElem r(target);
  for (const auto& [a, c] : x.terms())
    if (a % x.ring().p == 0) r.add_term(a / x.ring().p, c.retagged(target));
  return r;
}

// ---------------------------------------------------------------- words

bool CBWord::canonical() const {
  if (a < 0 || b < 0) return false;
  return shape == Shape::EF ? n <= b - a : n > b - a;
}

CBWord CBWord::basis(long a, long b, long n) {
  if (a < 0 || b < 0) throw std::invalid_argument("CBWord: negative exponent");
  return {n <= b - a ? Shape::EF : Shape::FE, a, b, n};
}

std::string CBWord::str() const {
  std::ostringstream os;
  if (shape == Shape::EF)
    os << "E(" << a << ")F(" << b << ")1[" << n << "]";
  else
    os << "F(" << b << ")E(" << a << ")1[" << n << "]";
  return os.str();
}

LaurentPoly qbinom_general(long m, long j) {
  if (j < 0) throw std::invalid_argument("qbinom_general: negative j");
  if (m >= 0) return j > m ? LaurentPoly() : qbinom(m, j);
  LaurentPoly r = qbinom(-m + j - 1, j);
  return j % 2 == 0 ? r : -r;
}

namespace {

struct Block {
  char letter;  // 'E' or 'F'
  long pow;
  bool operator<(const Block& o) const { return std::pair(letter, pow) < std::pair(o.letter, o.pow); }
};

using GenWord = std::pair<std::vector<Block>, long>;  // blocks left to right, right weight

void add_to(std::map<CBWord, LaurentPoly>& out, const CBWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

void add_to(std::map<GenWord, LaurentPoly>& out, const GenWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// Merge equal neighbours and drop zero powers; returns the binomial factor.
LaurentPoly tidy(std::vector<Block>& w) {
  LaurentPoly c(1);
  std::vector<Block> out;
  for (const Block& b : w) {
    if (b.pow == 0) continue;
    if (!out.empty() && out.back().letter == b.letter) {
      c = c * qbinom(out.back().pow + b.pow, b.pow);
      out.back().pow += b.pow;
    } else {
      out.push_back(b);
    }
  }
  w = std::move(out);
  return c;
}

// Rewrites an arbitrary product of divided powers into the canonical basis,
// moving E past F with E^{(a)}F^{(b)}1_w = sum_j [a-b+w, j] F^{(b-j)}E^{(a-j)}1_w
// and finishing with F^{(b)}E^{(a)}1_n = sum_j [b-a-n, j] E^{(a-j)}F^{(b-j)}1_n
// where the FE shape is not canonical.
std::map<CBWord, LaurentPoly> normalize(const std::vector<Block>& word, long n) {
  std::map<CBWord, LaurentPoly> out;
  std::map<GenWord, LaurentPoly> pending;
  pending.emplace(GenWord{word, n}, LaurentPoly(1));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    std::vector<Block> w = node.key().first;
    long wt = node.key().second;
    LaurentPoly c = node.mapped() * tidy(w);
    if (c.is_zero()) continue;
    // Leftmost E immediately followed by F.
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].letter == 'E' && w[i + 1].letter == 'F') {
        pos = i;
        break;
      }
    if (pos < w.size()) {
      long right = wt;
      for (std::size_t i = pos + 2; i < w.size(); ++i) right += (w[i].letter == 'E' ? 2 : -2) * w[i].pow;
      long a = w[pos].pow, b = w[pos + 1].pow;
      for (long j = 0; j <= std::min(a, b); ++j) {
        LaurentPoly k = qbinom_general(a - b + right, j);
        if (k.is_zero()) continue;
        std::vector<Block> nw(w.begin(), w.begin() + static_cast<long>(pos));
        nw.push_back({'F', b - j});
        nw.push_back({'E', a - j});
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        add_to(pending, GenWord{std::move(nw), wt}, c * k);
      }
      continue;
    }
    // Now of the form F^{(b)}E^{(a)}1_wt.
    long a = 0, b = 0;
    for (const Block& bl : w) (bl.letter == 'E' ? a : b) = bl.pow;
    if (wt >= b - a) {
      add_to(out, CBWord::basis(a, b, wt), c);
      continue;
    }
    for (long j = 0; j <= std::min(a, b); ++j)
      add_to(out, CBWord{Shape::EF, a - j, b - j, wt}, c * qbinom_general(b - a - wt, j));
  }
  return out;
}

std::vector<Block> blocks_of(const CBWord& w) {
  if (w.shape == Shape::EF) return {{'E', w.a}, {'F', w.b}};
  return {{'F', w.b}, {'E', w.a}};
}

}  // namespace

UdotElem UdotElem::word(Ring r, Shape s, long a, long b, long n, long c) {
  if (a < 0 || b < 0) throw std::invalid_argument("UdotElem::word: negative exponent");
  UdotElem e(r);
  CBWord w{s, a, b, n};
  for (const auto& [cw, k] : normalize(blocks_of(w), n)) e.add_term(cw, Coef(r, c) * Coef::from_laurent(k, r));
  return e;
}

void UdotElem::add_term(const CBWord& w, const Coef& c) {
  if (!w.canonical()) throw std::invalid_argument("UdotElem: non-canonical word " + w.str());
  if (c.ring() != ring_) throw std::invalid_argument("UdotElem: ring mismatch");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UdotElem& UdotElem::operator+=(const UdotElem& o) {
  if (o.ring_ != ring_) throw std::invalid_argument("UdotElem: ring mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UdotElem UdotElem::operator+(const UdotElem& o) const {
  UdotElem r = *this;
  return r += o;
}

UdotElem UdotElem::operator-(const UdotElem& o) const {
  UdotElem r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

UdotElem UdotElem::scaled(const Coef& c) const {
  UdotElem r(ring_);
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::string UdotElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << w.str();
  }
  return os.str();
}

std::map<CBWord, LaurentPoly> word_product(const CBWord& x, const CBWord& y) {
  if (x.source() != y.target()) return {};
  std::vector<Block> w = blocks_of(x);
  for (const Block& b : blocks_of(y)) w.push_back(b);
  return normalize(w, y.n);
}

namespace {

// Structure constants already mapped into a ring, shared across threads.
using ProductKey = std::tuple<CBWord, CBWord, int, int>;
using RingProduct = std::vector<std::pair<CBWord, Coef>>;

const RingProduct& ring_product(const CBWord& x, const CBWord& y, const Ring& r) {
  static std::shared_mutex mu;
  static std::map<ProductKey, RingProduct> cache;
  ProductKey key{x, y, static_cast<int>(r.tag), r.p};
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RingProduct val;
  for (const auto& [w, k] : word_product(x, y)) {
    Coef c = Coef::from_laurent(k, r);
    if (!c.is_zero()) val.emplace_back(w, std::move(c));
  }
  std::unique_lock lock(mu);
  return cache.emplace(key, std::move(val)).first->second;
}

}  // namespace

UdotElem udot_mult(const UdotElem& x, const UdotElem& y) {
  if (x.ring() != y.ring()) throw std::invalid_argument("udot_mult: ring mismatch");
  UdotElem r(x.ring());
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.source() != wy.target()) continue;
      Coef c = cx * cy;
      for (const auto& [w, k] : ring_product(wx, wy, x.ring())) r.add_term(w, c * k);
    }
  return r;
}

UdotElem frobenius(const UdotElem& x) {
  if (x.ring().tag != RingTag::Op) throw std::invalid_argument("frobenius: expects an O_p element");
  const long p = x.ring().p;
  Ring target = Ring::rho(x.ring().p);
  UdotElem r(target);
  for (const auto& [w, c] : x.terms()) {
    if (w.a % p != 0 || w.b % p != 0 || w.n % p != 0) continue;
    r.add_term(CBWord{w.shape, w.a / p, w.b / p, w.n / p}, c.retagged(target));
  }
  return r;
}

UdotElem frobenius_section(const UdotElem& x) {
  if (x.ring().tag != RingTag::Rho) throw std::invalid_argument("frobenius_section: expects a rho element");
  const long p = x.ring().p;
  Ring target = Ring::op(x.ring().p);
  UdotElem r(target);
  for (const auto& [w, c] : x.terms()) r.add_term(CBWord{w.shape, w.a * p, w.b * p, w.n * p}, c.retagged(target));
  return r;
}

// ---------------------------------------------------------------- oracle

namespace {

// Element of the generic algebra in the undivided PBW form vartheta^b theta^a 1_n
// for a fixed n: (b, a) -> coefficient.
using Pbw = std::map<std::pair<long, long>, LaurentPoly>;

void add_pbw(Pbw& out, std::pair<long, long> k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// theta * vartheta^b theta^a 1_n, using only theta vartheta 1_m = vartheta theta 1_m + [m] 1_m.
Pbw theta_times_uncached(long b, long a, long n);

const Pbw& theta_times(long b, long a, long n) {
  thread_local std::map<std::tuple<long, long, long>, Pbw> cache;
  auto key = std::tuple(b, a, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Pbw val = theta_times_uncached(b, a, n);
  return cache.emplace(key, std::move(val)).first->second;
}

Pbw theta_times_uncached(long b, long a, long n) {
  Pbw out;
  if (b == 0) {
    out.emplace(std::pair(0L, a + 1), LaurentPoly(1));
    return out;
  }
  // theta vartheta (vartheta^{b-1} theta^a 1_n): the middle weight is m.
  long m = n + 2 * a - 2 * (b - 1);
  for (const auto& [k, c] : theta_times(b - 1, a, n)) add_pbw(out, {k.first + 1, k.second}, c);
  add_pbw(out, {b - 1, a}, qint(m));
  return out;
}

Pbw left_mult(char letter, const Pbw& f, long n) {
  Pbw out;
  for (const auto& [k, c] : f) {
    if (letter == 'F') {
      add_pbw(out, {k.first + 1, k.second}, c);
    } else {
      for (const auto& [k2, c2] : theta_times(k.first, k.second, n)) add_pbw(out, k2, c * c2);
    }
  }
  return out;
}

Pbw expand_letters(const std::string& letters, long n) {
  Pbw f;
  f.emplace(std::pair(0L, 0L), LaurentPoly(1));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) f = left_mult(*it, f, n);
  return f;
}

std::string letters_of(const CBWord& w) {
  if (w.shape == Shape::EF) return std::string(static_cast<std::size_t>(w.a), 'E') + std::string(static_cast<std::size_t>(w.b), 'F');
  return std::string(static_cast<std::size_t>(w.b), 'F') + std::string(static_cast<std::size_t>(w.a), 'E');
}

LaurentPoly denom(const CBWord& w) { return qfactorial(w.a) * qfactorial(w.b); }

}  // namespace

bool oracle_agrees(const CBWord& x, const CBWord& y, std::string* why) {
  std::map<CBWord, LaurentPoly> ours = word_product(x, y);
  if (x.source() != y.target()) {
    if (ours.empty()) return true;
    if (why) *why = "weights mismatch but product nonzero";
    return false;
  }
  const long n = y.n;
  Pbw lhs = expand_letters(letters_of(x) + letters_of(y), n);
  LaurentPoly dxy = denom(x) * denom(y);
  LaurentPoly l(1);
  for (const auto& [w, c] : ours) l = l * denom(w);
  Pbw rhs;
  for (const auto& [w, c] : ours) {
    if (w.n != n) {
      if (why) *why = "term with wrong weight " + w.str();
      return false;
    }
    LaurentPoly factor = dxy * c * l.divide_exact(denom(w));
    for (const auto& [k, e] : expand_letters(letters_of(w), n)) add_pbw(rhs, k, factor * e);
  }
  Pbw lhs_scaled;
  for (const auto& [k, c] : lhs) add_pbw(lhs_scaled, k, c * l);
  if (lhs_scaled == rhs) return true;
  if (why) {
    std::ostringstream os;
    os << x.str() << " * " << y.str() << " -> ";
    bool first = true;
    for (const auto& [w, c] : ours) {
      os << (first ? "" : " + ") << "(" << c.str() << ")" << w.str();
      first = false;
    }
    if (first) os << "0";
    os << " disagrees with the oracle";
    *why = os.str();
  }
  return false;
}

// ---------------------------------------------------------------- checks

std::vector<CBWord> canonical_words(const UdotRange& r) {
  std::vector<CBWord> out;
  for (long a = 0; a <= r.max_ab; ++a)
    for (long b = 0; b <= r.max_ab; ++b)
      for (long n = -r.max_n; n <= r.max_n; ++n) out.push_back(CBWord::basis(a, b, n));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Runs body(i) for i in [0, count) over `jobs` workers; reports are merged in index order.
template <typename Body>
QCheckReport run_partitioned(std::size_t count, int jobs, Body body) {
  jobs = std::max(1, jobs);
  std::vector<std::future<QCheckReport>> parts;
  for (int t = 0; t < jobs; ++t) {
    parts.push_back(std::async(std::launch::async, [=, &body]() {
      QCheckReport rep;
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) {
        body(i, rep);
        if (!rep.ok) break;
      }
      return rep;
    }));
  }
  QCheckReport total;
  for (auto& f : parts) {
    QCheckReport r = f.get();
    total.cases += r.cases;
    if (!r.ok && total.ok) {
      total.ok = false;
      total.counterexample = r.counterexample;
    }
  }
  return total;
}

UdotElem basis_elem(Ring r, const CBWord& w) {
  UdotElem e(r);
  e.add_term(w, Coef(r, 1));
  return e;
}

}  // namespace

QCheckReport frobenius_hom_check(int p, const UdotRange& r, int jobs) {
  const Ring op = Ring::op(p);
  const std::vector<CBWord> words = canonical_words(r);
  return run_partitioned(words.size(), jobs, [&](std::size_t i, QCheckReport& rep) {
    const CBWord& x = words[i];
    UdotElem ex = basis_elem(op, x);
    UdotElem fx = frobenius(ex);
    for (const CBWord& y : words) {
      if (y.target() != x.source()) continue;
      UdotElem ey = basis_elem(op, y);
      UdotElem lhs = frobenius(udot_mult(ex, ey));
      UdotElem rhs = udot_mult(fx, frobenius(ey));
      ++rep.cases;
      if (lhs != rhs) {
        rep.ok = false;
        rep.counterexample = "Fr(" + x.str() + " * " + y.str() + ") = " + lhs.str() + " but Fr(x)Fr(y) = " + rhs.str();
        return;
      }
    }
  });
}

QCheckReport kernel_check(int p, const UdotRange& r, int jobs) {
  const Ring op = Ring::op(p);
  const std::vector<CBWord> words = canonical_words(r);
  return run_partitioned(words.size(), jobs, [&](std::size_t i, QCheckReport& rep) {
    const CBWord& z = words[i];
    UdotElem ez = basis_elem(op, z);
    // u 1_m with target weight z.source().
    for (int which = 0; which < 2; ++which) {
      long m = which == 0 ? z.source() - 2 : z.source() + 2;
      UdotElem u = which == 0 ? UdotElem::E(op, 1, m) : UdotElem::F(op, 1, m);
      UdotElem zu = udot_mult(ez, u);
      for (const CBWord& z2 : words) {
        if (z2.target() != m) continue;
        UdotElem img = frobenius(udot_mult(zu, basis_elem(op, z2)));
        ++rep.cases;
        if (!img.is_zero()) {
          rep.ok = false;
          rep.counterexample = "Fr(" + z.str() + " * " + (which == 0 ? "E" : "F") + "1[" + std::to_string(m) +
                               "] * " + z2.str() + ") = " + img.str();
          return;
        }
      }
    }
  });
}

QCheckReport section_check(int p, const UdotRange& r) {
  const Ring rh = Ring::rho(p);
  QCheckReport rep;
  for (const CBWord& w : canonical_words(r)) {
    UdotElem x = basis_elem(rh, w);
    UdotElem back = frobenius(frobenius_section(x));
    ++rep.cases;
    if (back != x) {
      rep.ok = false;
      rep.counterexample = "Fr(section(" + w.str() + ")) = " + back.str();
      break;
    }
  }
  return rep;
}

QCheckReport oracle_check(const UdotRange& r, int jobs) {
  const std::vector<CBWord> words = canonical_words(r);
  return run_partitioned(words.size(), jobs, [&](std::size_t i, QCheckReport& rep) {
    const CBWord& x = words[i];
    for (const CBWord& y : words) {
      if (y.target() != x.source()) continue;
      ++rep.cases;
      std::string why;
      if (!oracle_agrees(x, y, &why)) {
        rep.ok = false;
        rep.counterexample = why;
        return;
      }
    }
  });
}

// ---------------------------------------------------------------- K_0

K0Report k0_symbol_report(int a, int b, int p) {
  if (a < 0 || b < 0) throw std::invalid_argument("k0_symbol_report: negative parameter");
  K0Report rep;
  rep.euler = CycElem(p);
  rep.slash_char = CycElem(p);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a + b), static_cast<unsigned long>(a));
  rep.binomial = binom.get_si();

  SymParams prm;
  prm.a = a;
  prm.b = b;
  SchurComplex v = as_pcomplex(SymSource::Vab, static_cast<fp_t>(p), prm, std::nullopt);
  for (const auto& [d, dim] : v.cx.dims) rep.euler += CycElem::q_pow(p, d) * dim;
  std::vector<GradedDims> h = slash_dims(v.cx);
  bool higher_vanish = true;
  for (std::size_t k = 0; k < h.size(); ++k)
    for (const auto& [d, dim] : h[k].dims) {
      if (k == 0)
        rep.slash_char += CycElem::q_pow(p, d) * dim;
      else if (dim != 0)
        higher_vanish = false;
    }
  const long shift = -static_cast<long>(a) * b * p * p;
  rep.literal = CycElem::q_pow(p, shift) * rep.slash_char;
  rep.reduced_binom = CycElem::q_pow(p, shift) * to_Op(qbinom(static_cast<long>(a + b) * p, static_cast<long>(a) * p), p);
  CycElem c(p, rep.binomial);
  rep.ok = higher_vanish && rep.euler == c && rep.slash_char == c && rep.reduced_binom == c;
  return rep;
}

bool k0_symbol_check(int a, int b, int p) { return k0_symbol_report(a, b, p).ok; }

}  // namespace pdg

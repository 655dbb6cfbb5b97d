#include "pdg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdg {

int mono_exp(MonoKey k, int i) { return static_cast<int>((k >> (8 * (kMaxVars - 1 - i))) & 0xff); }

MonoKey mono_set(MonoKey k, int i, int e) {
  if (e < 0 || e > 255) throw std::overflow_error("monomial exponent out of range");
  int sh = 8 * (kMaxVars - 1 - i);
  return (k & ~(MonoKey(0xff) << sh)) | (MonoKey(e) << sh);
}

int mono_total(MonoKey k, int n) {
  int t = 0;
  for (int i = 0; i < n; ++i) t += mono_exp(k, i);
  return t;
}

namespace {
void gen_monos(int n, int i, int left, MonoKey cur, std::vector<MonoKey>& out) {
  if (i == n - 1) {
    out.push_back(mono_set(cur, i, left));
    return;
  }
  for (int e = left; e >= 0; --e) gen_monos(n, i + 1, left - e, mono_set(cur, i, e), out);
}
}  // namespace

std::vector<MonoKey> monomials(int n, int m) {
  std::vector<MonoKey> out;
  if (n == 0) {
    if (m == 0) out.push_back(0);
    return out;
  }
  gen_monos(n, 0, m, 0, out);
  return out;
}

PolElem::PolElem(int n, fp_t p) : n_(n), p_(p) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("PolElem: at most 8 variables");
}

PolElem PolElem::constant(int n, fp_t p, long c) {
  PolElem f(n, p);
  f.add_term(0, fp_reduce(c, p));
  return f;
}

PolElem PolElem::var(int n, fp_t p, int i) {
  PolElem f(n, p);
  f.add_term(mono_set(0, i, 1), 1);
  return f;
}

PolElem PolElem::monomial(int n, fp_t p, const std::vector<int>& exps, long c) {
  PolElem f(n, p);
  MonoKey k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) k = mono_set(k, static_cast<int>(i), exps[i]);
  f.add_term(k, fp_reduce(c, p));
  return f;
}

void PolElem::add_term(MonoKey k, fp_t c) {
  if (!c) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second = fp_add(it->second, c, p_);
    if (!it->second) terms_.erase(it);
  }
}

fp_t PolElem::coeff(MonoKey k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

PolElem& PolElem::operator+=(const PolElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolElem& PolElem::operator-=(const PolElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, fp_neg(c, p_));
  return *this;
}

PolElem PolElem::operator+(const PolElem& o) const {
  PolElem r = *this;
  return r += o;
}

PolElem PolElem::operator-(const PolElem& o) const {
  PolElem r = *this;
  return r -= o;
}

PolElem PolElem::operator*(const PolElem& o) const {
  PolElem r(n_, p_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      // Packed addition is safe while every exponent stays below 256.
      for (int i = 0; i < n_; ++i)
        if (mono_exp(k1, i) + mono_exp(k2, i) > 255) throw std::overflow_error("PolElem: exponent overflow");
      r.add_term(k1 + k2, fp_mul(c1, c2, p_));
    }
  return r;
}

PolElem PolElem::scaled(long c) const {
  PolElem r(n_, p_);
  fp_t x = fp_reduce(c, p_);
  for (const auto& [k, a] : terms_) r.add_term(k, fp_mul(a, x, p_));
  return r;
}

PolElem PolElem::swapped(int i) const {
  PolElem r(n_, p_);
  for (const auto& [k, c] : terms_) {
    int a = mono_exp(k, i), b = mono_exp(k, i + 1);
    r.add_term(mono_set(mono_set(k, i, b), i + 1, a), c);
  }
  return r;
}

std::string PolElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(it->first, i);
      if (e == 0) continue;
      os << "*x" << (i + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

PolElem pol_diff(const PolElem& f) {
  PolElem r(f.n(), f.p());
  for (const auto& [k, c] : f.terms())
    for (int i = 0; i < f.n(); ++i) {
      int e = mono_exp(k, i);
      if (e == 0) continue;
      r.add_term(mono_set(k, i, e + 1), fp_mul(c, fp_reduce(e, f.p()), f.p()));
    }
  return r;
}

namespace {
void check_index(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("demazure: need 1 <= i <= n-1");
}
}  // namespace

PolElem demazure(int i, const PolElem& f) {
  check_index(i, f.n());
  int a = i - 1, b = i;
  fp_t p = f.p();
  PolElem rem = f - f.swapped(a);
  PolElem quo(f.n(), f.p());
  // Divide by x_a - x_b, eliminating the highest power of x_a each step.
  while (!rem.is_zero()) {
    MonoKey lead = 0;
    int best = -1;
    for (const auto& [k, c] : rem.terms())
      if (mono_exp(k, a) > best) {
        best = mono_exp(k, a);
        lead = k;
      }
    if (best == 0) throw std::logic_error("demazure: nonzero remainder");
    fp_t c = rem.coeff(lead);
    MonoKey q = mono_set(lead, a, best - 1);
    quo.add_term(q, c);
    rem.add_term(lead, fp_neg(c, p));
    rem.add_term(mono_set(q, b, mono_exp(q, b) + 1), c);
  }
  return quo;
}

PolElem demazure_fast(int i, const PolElem& f) {
  check_index(i, f.n());
  int a = i - 1, b = i;
  fp_t p = f.p();
  PolElem r(f.n(), p);
  for (const auto& [k, c] : f.terms()) {
    int ea = mono_exp(k, a), eb = mono_exp(k, b);
    if (ea == eb) continue;
    // (x^u y^v - x^v y^u)/(x - y) = sum_{t=0}^{u-v-1} x^{u-1-t} y^{v+t} for u > v.
    int hi = std::max(ea, eb), lo = std::min(ea, eb);
    fp_t s = ea > eb ? c : fp_neg(c, p);
    for (int t = 0; t < hi - lo; ++t) r.add_term(mono_set(mono_set(k, a, hi - 1 - t), b, lo + t), s);
  }
  return r;
}

OperatorOnWindow OperatorOnWindow::from_function(int n, fp_t p, int shift, int max_deg,
                                                 const std::function<PolElem(const PolElem&)>& f) {
  OperatorOnWindow op;
  op.n_ = n;
  op.p_ = p;
  op.shift_ = shift;
  op.max_deg_ = max_deg;
  for (int m = 0; 2 * m <= max_deg; ++m)
    for (MonoKey k : monomials(n, m)) {
      PolElem src(n, p);
      src.add_term(k, 1);
      PolElem img = f(src);
      for (const auto& [t, c] : img.terms())
        if (2 * mono_total(t, n) != 2 * m + shift)
          throw std::logic_error("OperatorOnWindow: image is not homogeneous of the declared shift");
      op.images_.emplace(k, std::move(img));
    }
  return op;
}

OperatorOnWindow OperatorOnWindow::identity(int n, fp_t p, int max_deg) {
  return from_function(n, p, 0, max_deg, [](const PolElem& f) { return f; });
}

const PolElem& OperatorOnWindow::image(MonoKey k) const {
  auto it = images_.find(k);
  if (it == images_.end()) throw std::out_of_range("OperatorOnWindow: monomial outside the window");
  return it->second;
}

PolElem OperatorOnWindow::apply(const PolElem& f) const {
  PolElem r(n_, p_);
  for (const auto& [k, c] : f.terms()) {
    const PolElem& img = image(k);
    for (const auto& [t, x] : img.terms()) r.add_term(t, fp_mul(c, x, p_));
  }
  return r;
}

OperatorOnWindow compose(const OperatorOnWindow& a, const OperatorOnWindow& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("compose: mismatched operators");
  OperatorOnWindow r;
  r.n_ = a.n_;
  r.p_ = a.p_;
  r.shift_ = a.shift_ + b.shift_;
  r.max_deg_ = std::min(b.max_deg_, a.max_deg_ - b.shift_);
  for (const auto& [k, img] : b.images_)
    if (2 * mono_total(k, r.n_) <= r.max_deg_) r.images_.emplace(k, a.apply(img));
  return r;
}

OperatorOnWindow OperatorOnWindow::operator+(const OperatorOnWindow& o) const {
  if (o.shift_ != shift_ || o.n_ != n_) throw std::invalid_argument("OperatorOnWindow: shifts differ");
  OperatorOnWindow r = *this;
  r.max_deg_ = std::min(max_deg_, o.max_deg_);
  r.images_.clear();
  for (const auto& [k, img] : images_)
    if (2 * mono_total(k, n_) <= r.max_deg_) r.images_.emplace(k, img + o.image(k));
  return r;
}

OperatorOnWindow OperatorOnWindow::operator-(const OperatorOnWindow& o) const { return *this + o.scaled(-1); }

OperatorOnWindow OperatorOnWindow::scaled(long c) const {
  OperatorOnWindow r = *this;
  for (auto& [k, img] : r.images_) img = img.scaled(c);
  return r;
}

bool OperatorOnWindow::equals(const OperatorOnWindow& o, std::string* why) const {
  if (o.shift_ != shift_ || o.n_ != n_) {
    if (why) *why = "different degree shift";
    return false;
  }
  int top = std::min(max_deg_, o.max_deg_);
  for (const auto& [k, img] : images_) {
    if (2 * mono_total(k, n_) > top) continue;
    if (!(img == o.image(k))) {
      if (why) {
        PolElem m(n_, p_);
        m.add_term(k, 1);
        *why = "differ on " + m.str() + ": " + img.str() + " vs " + o.image(k).str();
      }
      return false;
    }
  }
  return true;
}

bool OperatorOnWindow::is_zero() const {
  for (const auto& [k, img] : images_)
    if (!img.is_zero()) return false;
  return true;
}

long OperatorOnWindow::window_size() const { return static_cast<long>(images_.size()); }

RelationReport nilhecke_relations_check(int n, fp_t p, int window) {
  RelationReport rep;
  rep.window = window;
  if (n <= 1) return rep;
  if (window < 4 * n) throw std::invalid_argument("nilhecke_relations_check: window must be at least 4n");
  // Build generators with room for two raising steps.
  int top = window + 4;
  std::vector<OperatorOnWindow> x, d;
  for (int i = 0; i < n; ++i)
    x.push_back(OperatorOnWindow::from_function(n, p, 2, top, [&](const PolElem& f) { return PolElem::var(n, p, i) * f; }));
  for (int i = 1; i < n; ++i)
    d.push_back(OperatorOnWindow::from_function(n, p, -2, top, [i](const PolElem& f) { return demazure_fast(i, f); }));
  OperatorOnWindow id = OperatorOnWindow::identity(n, p, top);
  auto check = [&](const OperatorOnWindow& lhs, const OperatorOnWindow& rhs, const std::string& name) {
    if (!rep.ok) return;
    std::string why;
    if (!lhs.equals(rhs, &why) || std::min(lhs.max_deg(), rhs.max_deg()) < window) {
      rep.ok = false;
      rep.failure = name + (why.empty() ? ": window too small" : ": " + why);
    }
    rep.monomials_checked += std::min(lhs.window_size(), rhs.window_size());
  };
  for (int i = 0; i + 1 < n; ++i) {
    std::string tag = std::to_string(i + 1);
    OperatorOnWindow sq = compose(d[i], d[i]);
    check(sq, sq.scaled(0), "d_" + tag + "^2 = 0");
    OperatorOnWindow a = compose(x[i], d[i]) - compose(d[i], x[i + 1]);
    check(a, id, "x_" + tag + " d_" + tag + " - d_" + tag + " x_" + std::to_string(i + 2) + " = 1");
    OperatorOnWindow b = compose(d[i], x[i]) - compose(x[i + 1], d[i]);
    check(b, id, "d_" + tag + " x_" + tag + " - x_" + std::to_string(i + 2) + " d_" + tag + " = 1");
    if (i + 2 < n) {
      OperatorOnWindow l = compose(d[i], compose(d[i + 1], d[i]));
      OperatorOnWindow r = compose(d[i + 1], compose(d[i], d[i + 1]));
      check(l, r, "braid at " + tag);
    }
  }
  return rep;
}

OperatorOnWindow nh_differential(const OperatorOnWindow& t) {
  int n = t.n();
  fp_t p = t.p();
  int top = t.max_deg() + 2;
  OperatorOnWindow d = OperatorOnWindow::from_function(n, p, 2, top + std::max(0, t.shift()), pol_diff);
  // d o T is known up to t.max_deg(); T o d needs T on degree s+2.
  OperatorOnWindow dt = compose(d, t);
  OperatorOnWindow td = compose(t, d);
  return dt - td;
}

}  // namespace pdg

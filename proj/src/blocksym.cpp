#include "pdg/blocksym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pdg {

BlockSym BlockSym::one(fp_t p, const std::vector<int>& sizes) {
  BlockSym f(p, sizes);
  f.add_term(Key(sizes.size()), 1);
  return f;
}

BlockSym BlockSym::term(fp_t p, const std::vector<int>& sizes, const Key& k, long c) {
  BlockSym f(p, sizes);
  f.add_term(k, c);
  return f;
}

void BlockSym::add_term_fp(const Key& k, fp_t c) {
  if (!c) return;
  if (k.size() != sizes_.size()) throw std::invalid_argument("BlockSym: key has wrong number of blocks");
  for (std::size_t i = 0; i < k.size(); ++i)
    if (static_cast<int>(k[i].size()) > sizes_[i]) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second = fp_add(it->second, c, p_);
    if (!it->second) terms_.erase(it);
  }
}

void BlockSym::add_term(const Key& k, long c) { add_term_fp(k, fp_reduce(c, p_)); }

BlockSym& BlockSym::operator+=(const BlockSym& o) {
  if (o.p_ != p_ || o.sizes_ != sizes_) throw std::invalid_argument("BlockSym: mismatched shapes");
  for (const auto& [k, c] : o.terms_) add_term_fp(k, c);
  return *this;
}

BlockSym& BlockSym::operator-=(const BlockSym& o) {
  if (o.p_ != p_ || o.sizes_ != sizes_) throw std::invalid_argument("BlockSym: mismatched shapes");
  for (const auto& [k, c] : o.terms_) add_term_fp(k, fp_neg(c, p_));
  return *this;
}

BlockSym BlockSym::scaled(long c) const {
  BlockSym r(p_, sizes_);
  fp_t x = fp_reduce(c, p_);
  if (!x) return r;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k, fp_mul(a, x, p_));
  return r;
}

int key_degree(const BlockSym::Key& k) {
  int d = 0;
  for (const auto& l : k) d += 2 * size(l);
  return d;
}

BlockSym mult_block(const BlockSym& f, int k, const Partition& nu) {
  BlockSym r(f.p(), f.sizes());
  int rows = f.sizes()[k];
  for (const auto& [key, c] : f.terms()) {
    for (const auto& [l, m] : lr_product(key[k], nu, rows)) {
      BlockSym::Key nk = key;
      nk[k] = l;
      r.add_term_fp(nk, fp_mul(c, fp_reduce(m, f.p()), f.p()));
    }
  }
  return r;
}

BlockSym mult(const BlockSym& f, const BlockSym& g) {
  if (f.p() != g.p() || f.sizes() != g.sizes()) throw std::invalid_argument("BlockSym mult: mismatched shapes");
  BlockSym r(f.p(), f.sizes());
  fp_t p = f.p();
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      // Blockwise product: expand one block at a time.
      std::map<BlockSym::Key, fp_t> partial{{BlockSym::Key(), fp_mul(cf, cg, p)}};
      for (int b = 0; b < f.blocks(); ++b) {
        std::map<BlockSym::Key, fp_t> next;
        const auto& prod = lr_product(kf[b], kg[b], f.sizes()[b]);
        for (const auto& [pk, pc] : partial)
          for (const auto& [l, m] : prod) {
            fp_t x = fp_mul(pc, fp_reduce(m, p), p);
            if (!x) continue;
            auto nk = pk;
            nk.push_back(l);
            fp_t& slot = next[nk];
            slot = fp_add(slot, x, p);
          }
        partial = std::move(next);
      }
      for (const auto& [k, c] : partial) r.add_term_fp(k, c);
    }
  return r;
}

BlockSym embed(const SchurPoly& g, const std::vector<int>& sizes, int first, int count) {
  int total = 0;
  for (int i = first; i < first + count; ++i) total += sizes[i];
  // Split off one block at a time from the left.
  std::map<std::vector<Partition>, fp_t> parts;
  for (const auto& [l, c] : g.terms())
    if (static_cast<int>(l.size()) <= total) parts[{l}] = c;
  int rest = total;
  for (int b = first; b < first + count - 1; ++b) {
    rest -= sizes[b];
    std::map<std::vector<Partition>, fp_t> next;
    for (const auto& [key, c] : parts) {
      SchurPoly tail = SchurPoly::schur(g.p(), sizes[b] + rest, key.back(), c);
      for (const auto& [pr, x] : split_vars(tail, sizes[b], rest)) {
        auto nk = key;
        nk.back() = pr.first;
        nk.push_back(pr.second);
        fp_t& slot = next[nk];
        slot = fp_add(slot, x, g.p());
      }
    }
    parts = std::move(next);
  }
  BlockSym r(g.p(), sizes);
  for (const auto& [key, c] : parts) {
    BlockSym::Key k(sizes.size());
    for (int i = 0; i < count; ++i) k[first + i] = key[i];
    r.add_term_fp(k, c);
  }
  return r;
}

BlockSym split_block(const BlockSym& f, int k, int c, int d) {
  if (c + d != f.sizes()[k]) throw std::invalid_argument("split_block: sizes do not add up");
  std::vector<int> ns = f.sizes();
  ns[k] = c;
  ns.insert(ns.begin() + k + 1, d);
  BlockSym r(f.p(), ns);
  for (const auto& [key, x] : f.terms()) {
    SchurPoly g = SchurPoly::schur(f.p(), c + d, key[k], x);
    for (const auto& [pr, y] : split_vars(g, c, d)) {
      BlockSym::Key nk = key;
      nk[k] = pr.first;
      nk.insert(nk.begin() + k + 1, pr.second);
      r.add_term_fp(nk, y);
    }
  }
  return r;
}

std::optional<std::pair<long, Partition>> pushforward(const Partition& alpha, int c, const Partition& beta, int d) {
  int n = c + d;
  std::vector<int> g(n);
  for (int i = 0; i < c; ++i) g[i] = (i < static_cast<int>(alpha.size()) ? alpha[i] : 0) + c - 1 - i;
  for (int j = 0; j < d; ++j) g[c + j] = (j < static_cast<int>(beta.size()) ? beta[j] : 0) + d - 1 - j;
  // Sort decreasing, tracking the sign of the permutation.
  long sign = 1;
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0 && g[j - 1] < g[j]; --j) {
      std::swap(g[j - 1], g[j]);
      sign = -sign;
    }
  for (int i = 1; i < n; ++i)
    if (g[i] == g[i - 1]) return std::nullopt;
  Partition nu;
  for (int i = 0; i < n; ++i) {
    int part = g[i] - (n - 1 - i);
    if (part < 0) return std::nullopt;
    if (part > 0) nu.push_back(part);
  }
  return std::make_pair(sign, nu);
}

BlockSym merge_push(const BlockSym& f, int k) {
  int c = f.sizes()[k], d = f.sizes()[k + 1];
  std::vector<int> ns = f.sizes();
  ns[k] = c + d;
  ns.erase(ns.begin() + k + 1);
  BlockSym r(f.p(), ns);
  for (const auto& [key, x] : f.terms()) {
    auto pf = pushforward(key[k], c, key[k + 1], d);
    if (!pf) continue;
    BlockSym::Key nk = key;
    nk[k] = pf->second;
    nk.erase(nk.begin() + k + 1);
    r.add_term_fp(nk, pf->first > 0 ? x : fp_neg(x, f.p()));
  }
  return r;
}

BlockSym block_crossing(const BlockSym& f, int k) {
  return split_block(merge_push(f, k), k, f.sizes()[k], f.sizes()[k + 1]);
}

BlockSym block_diff(const BlockSym& f, const std::vector<long>& twist) {
  BlockSym r(f.p(), f.sizes());
  for (const auto& [key, x] : f.terms()) {
    for (int b = 0; b < f.blocks(); ++b) {
      long shift = b < static_cast<int>(twist.size()) ? twist[b] : 0;
      SchurPoly one_block = box_diff(SchurPoly::schur(f.p(), f.sizes()[b], key[b], x), shift);
      for (const auto& [l, y] : one_block.terms()) {
        BlockSym::Key nk = key;
        nk[b] = l;
        r.add_term_fp(nk, y);
      }
    }
  }
  return r;
}

namespace {
struct KeyOrder {
  bool operator()(const BlockSym::Key& a, const BlockSym::Key& b) const {
    int da = key_degree(a), db = key_degree(b);
    if (da != db) return da < db;
    PartitionOrder po;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (po(a[i], b[i])) return true;
      if (po(b[i], a[i])) return false;
    }
    return false;
  }
};
}  // namespace

Tower make_tower(fp_t p, const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("make_tower: need at least one block");
  Tower t;
  t.p = p;
  t.sizes = sizes;
  t.N = std::accumulate(sizes.begin(), sizes.end(), 0);
  int m = static_cast<int>(sizes.size());
  std::vector<BlockSym::Key> keys{BlockSym::Key()};
  int rest = t.N;
  for (int j = 0; j + 1 < m; ++j) {
    rest -= sizes[j];
    std::vector<BlockSym::Key> next;
    auto box = partitions_in_box(rest, sizes[j]);
    for (const auto& k : keys)
      for (const auto& l : box) {
        auto nk = k;
        nk.push_back(l);
        next.push_back(nk);
      }
    keys = std::move(next);
  }
  std::stable_sort(keys.begin(), keys.end(), KeyOrder());
  t.basis = keys;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    t.degree.push_back(key_degree(keys[i]));
    t.index[keys[i]] = static_cast<int>(i);
  }
  return t;
}

BlockSym Tower::element(int i) const {
  BlockSym f = BlockSym::one(p, sizes);
  int m = static_cast<int>(sizes.size());
  for (int j = 0; j + 1 < m; ++j) {
    const Partition& l = basis[i][j];
    if (l.empty()) continue;
    int rest = 0;
    for (int b = j + 1; b < m; ++b) rest += sizes[b];
    f = mult(f, embed(SchurPoly::schur(p, rest, l), sizes, j + 1, m - j - 1));
  }
  return f;
}

std::vector<SchurPoly> Tower::decompose(const BlockSym& f) const {
  if (f.sizes() != sizes || f.p() != p) throw std::invalid_argument("Tower::decompose: wrong shape");
  int m = static_cast<int>(sizes.size());
  // tail (l_{j+1}, ..., l_{m-2}) -> coefficient with blocks B_0..B_j, R_{j+1}.
  std::map<BlockSym::Key, BlockSym> work{{BlockSym::Key(), f}};
  int rest = sizes[m - 1];
  for (int j = m - 2; j >= 0; --j) {
    int c = sizes[j], d = rest;
    auto box = partitions_in_box(c, d);
    std::map<BlockSym::Key, BlockSym> next;
    for (const auto& [tail, g] : work) {
      if (g.is_zero()) continue;
      for (const auto& l : box) {
        BlockSym h = mult_block(g, j, l);
        BlockSym pushed = merge_push(h, j);
        if (pushed.is_zero()) continue;
        Partition mu = complement_transpose(l, c, d);
        auto pf = pushforward(l, c, mu, d);
        if (!pf || !pf->second.empty()) throw std::logic_error("Tower::decompose: pairing is not perfect");
        BlockSym::Key nt;
        nt.push_back(mu);
        nt.insert(nt.end(), tail.begin(), tail.end());
        auto it = next.find(nt);
        BlockSym contrib = pushed.scaled(pf->first);
        if (it == next.end()) next.emplace(nt, std::move(contrib));
        else it->second += contrib;
      }
    }
    work = std::move(next);
    rest += c;
  }
  std::vector<SchurPoly> out(basis.size(), SchurPoly(p, N));
  for (const auto& [tail, g] : work) {
    auto it = index.find(tail);
    if (it == index.end()) throw std::logic_error("Tower::decompose: unknown basis label");
    for (const auto& [key, x] : g.terms()) out[it->second].add_term(key[0], x);
  }
  return out;
}

}  // namespace pdg

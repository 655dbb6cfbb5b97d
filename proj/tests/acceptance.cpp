// Acceptance runner: one line per criterion with status and wall time against
// its budget. A criterion passes only if every sub-check passes in time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pdg/checks.hpp"

using pdg::CheckResult;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> slash() {
  std::vector<CheckResult> out;
  for (int p : {2, 3})
    for (int n = 1; n <= 6; ++n) out.push_back(pdg::check_slash(p, n, 8 * p * p));
  return out;
}

std::vector<CheckResult> twist() {
  std::vector<CheckResult> out;
  for (int p : {2, 3})
    for (int n = 1; n <= 6; ++n)
      for (int a = 1; a <= n % p; ++a) out.push_back(pdg::check_twist(p, n, a, 8 * p * p));
  return out;
}

std::vector<CheckResult> lima() {
  std::vector<CheckResult> out;
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    out.push_back(pdg::check_lima(2, a, b));
    out.push_back(pdg::check_lima(3, a, b));
  }
  out.push_back(pdg::check_lima(2, 2, 2));
  return out;
}

std::vector<CheckResult> vi() {
  std::vector<CheckResult> out;
  for (int p : {2, 3, 5})
    for (int i = 1; i < p; ++i)
      for (int k = 1; k <= 3; ++k) out.push_back(pdg::check_vi(p, i, k));
  return out;
}

std::vector<CheckResult> binom() {
  std::vector<CheckResult> out;
  for (int p : {2, 3, 5}) out.push_back(pdg::check_binom(p, 4));
  return out;
}

std::vector<CheckResult> nh_acyclic() { return {pdg::check_nh_acyclic(2, 40), pdg::check_nh_acyclic(3, 54)}; }

std::vector<CheckResult> thick() { return {pdg::check_thick(2, 2, 40), pdg::check_thick(2, 3, 48)}; }

std::vector<CheckResult> formality() { return {pdg::check_formality(2, 1, 1, 32), pdg::check_formality(3, 1, 1, 60)}; }

std::vector<CheckResult> frobenius() {
  std::vector<CheckResult> out;
  for (int p : {2, 3}) {
    out.push_back(pdg::check_frobenius_hom(p, 2 * p, 4 * p, 1));
    out.push_back(pdg::check_kernel(p, 2 * p, 4 * p, 1));
  }
  return out;
}

std::vector<CheckResult> oracle() { return {pdg::check_oracle(4, 8, 1)}; }

std::vector<CheckResult> section() { return {pdg::check_section(2, 3, 6), pdg::check_section(3, 3, 6)}; }

std::vector<CheckResult> k0() {
  std::vector<CheckResult> out;
  for (int p : {2, 3})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) out.push_back(pdg::check_k0(p, a, b));
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "slash formality of Sym_n", 60, slash},
      {2, "acyclic twists S_n(a)", 60, twist},
      {3, "p-Lima basis of H_/(V_{a,b})", 120, lima},
      {4, "V_i contractible", 60, vi},
      {5, "quantum binomial reduction", 5, binom},
      {6, "NH_p acyclic", 300, nh_acyclic},
      {7, "thick nilHecke", 600, thick},
      {8, "formality of END(S_{p,p})", 300, formality},
      {9, "Frobenius homomorphism and kernel", 300, frobenius},
      {10, "commutation oracle", 120, oracle},
      {11, "Frobenius section", 5, section},
      {12, "K0 multiplication shadow", 30, k0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long bad = 0;
    std::string first;
    for (const auto& r : results)
      if (!r.pass()) {
        if (!bad) first = r.check + " " + r.params.dump() + " " + pdg::to_string(r.status);
        ++bad;
      }
    bool in_time = secs < c.budget_s;
    bool ok = error.empty() && bad == 0 && in_time;
    if (!ok) ++failed;
    std::printf("criterion %2d %-36s %s  %8.2fs / %4.0fs  %zu checks", c.id, c.name.c_str(), ok ? "PASS" : "FAIL", secs,
                c.budget_s, results.size());
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    if (bad) std::printf("  %ld failing, first: %s", bad, first.c_str());
    if (!in_time) std::printf("  over budget");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}

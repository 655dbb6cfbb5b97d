// Named verification checks with structured results, shared by the CLI and the
// acceptance runner.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace pdg {

// Bad parameter combination; the CLI maps it to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Status { Pass, Fail, SkippedWindow };
std::string to_string(Status s);

struct CheckResult {
  std::string check;
  nlohmann::ordered_json params;
  Status status = Status::Pass;
  nlohmann::ordered_json values;
  double ms = 0;

  bool pass() const { return status == Status::Pass; }
  nlohmann::ordered_json to_json() const;
};

// Sym_n: H_/0 is k[e_p^p, ..., e_{mp}^p] with m = floor(n/p), H_/k = 0 for k >= 1.
CheckResult check_slash(int p, int n, int cap);
// S_n(a) acyclic for n = kp + r and 1 <= a <= r.
CheckResult check_twist(int p, int n, int a, int cap);
// H_/(V_{a,b}) has the p-Lima Schur polynomials as a basis.
CheckResult check_lima(int p, int a, int b);
// V_i on P(i, kp - i) is a sum of strings of length p.
CheckResult check_vi(int p, int i, int k);
// Quantum binomial and rho evaluation identities for a, b <= max.
CheckResult check_binom(int p, int max);
CheckResult check_nh_relations(int p, int n, int window);
CheckResult check_nh_acyclic(int p, int cap);
CheckResult check_thick(int p, int a, int cap);
// S_{a,b}: graded rank, d^p = 0 on the module, pairing on complementary pairs.
CheckResult check_grass(int p, int a, int b);
// END(S_{ap,bp}) against the matrix algebra over k[e_p^p, ..., e_{(a+b)p}^p].
CheckResult check_formality(int p, int a, int b, int cap);
CheckResult check_k0(int p, int a, int b);
CheckResult check_frobenius_hom(int p, int max_ab, int max_n, int jobs);
CheckResult check_kernel(int p, int max_ab, int max_n, int jobs);
CheckResult check_section(int p, int max_ab, int max_n);
CheckResult check_oracle(int max_ab, int max_n, int jobs);
CheckResult check_half_frobenius(int p, int max);
// theta0(e'_j) for j <= k: nonzero H_/0 classes in Sym_n, and the splitting
// of e_{kp}^p into (ap, bp) and (p-1, p+1) variables up to coboundaries.
CheckResult check_theta0(int p, int k, int cap);

using Params = std::map<std::string, long>;

const std::vector<std::string>& subcommands();
// Keys each subcommand reads.
const std::vector<std::string>& subcommand_keys(const std::string& name);
// Throws UsageError on an unknown name or a missing or invalid parameter.
std::vector<CheckResult> run_subcommand(const std::string& name, const Params& prm);

// Plain "section.key = value" text; '#' starts a comment.
std::map<std::string, Params> load_config(const std::string& path);

}  // namespace pdg

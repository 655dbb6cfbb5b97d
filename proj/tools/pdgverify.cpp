// Batch verification harness: runs named checks, prints a table, optionally
// writes a JSON report. Exit status 0 if every check passes, 1 if any check
// fails or is skipped, 2 on a usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>

#include "json.hpp"
#include "pdg/checks.hpp"

#ifndef PDG_DEFAULT_CONFIG
#define PDG_DEFAULT_CONFIG "config/defaults.conf"
#endif

namespace {

using pdg::CheckResult;
using pdg::Params;

constexpr const char* kConfigEnv = "PDG_CONFIG";

struct Flags {
  std::map<std::string, std::optional<long>> values;
  std::string json_path;
  std::string config_path;
};

std::string summary(const CheckResult& r) {
  std::string s;
  for (const auto& [k, v] : r.values.items()) {
    if (k == "failure" || k == "counterexample" || k == "reason") return v.get<std::string>();
    if (v.is_primitive()) {
      if (!s.empty()) s += " ";
      s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  return s;
}

void print_table(const std::vector<CheckResult>& results) {
  std::cout << std::left << std::setw(22) << "check" << std::setw(16) << "status" << std::right << std::setw(10) << "ms"
            << "  params / values\n";
  for (const auto& r : results) {
    std::cout << std::left << std::setw(22) << r.check << std::setw(16) << pdg::to_string(r.status) << std::right
              << std::setw(10) << std::fixed << std::setprecision(1) << r.ms << "  " << r.params.dump() << "  "
              << summary(r) << "\n";
  }
}

std::string config_path(const Flags& f) {
  if (!f.config_path.empty()) return f.config_path;
  if (const char* env = std::getenv(kConfigEnv); env && *env) return env;
  return PDG_DEFAULT_CONFIG;
}

Params merged(const std::map<std::string, Params>& cfg, const std::string& section, const Flags& f) {
  Params prm;
  if (auto it = cfg.find(section); it != cfg.end()) prm = it->second;
  for (const auto& [k, v] : f.values)
    if (v) prm[k] = *v;
  return prm;
}

std::vector<CheckResult> report_all(const std::map<std::string, Params>& cfg, const Flags& f) {
  long jobs = merged(cfg, "report-all", f).count("jobs") ? merged(cfg, "report-all", f).at("jobs") : 1;
  jobs = std::max(1L, jobs);
  std::vector<std::string> names;
  for (const auto& n : pdg::subcommands())
    if (n != "report-all") names.push_back(n);
  std::vector<std::vector<CheckResult>> parts(names.size());
  // Each subcommand runs with its own config section only; `jobs` bounds concurrency.
  for (std::size_t start = 0; start < names.size(); start += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<std::vector<CheckResult>>> running;
    std::size_t end = std::min(names.size(), start + static_cast<std::size_t>(jobs));
    for (std::size_t i = start; i < end; ++i) {
      Params prm;
      if (auto it = cfg.find(names[i]); it != cfg.end()) prm = it->second;
      running.push_back(std::async(std::launch::async, [name = names[i], prm] { return pdg::run_subcommand(name, prm); }));
    }
    for (std::size_t i = start; i < end; ++i) parts[i] = running[i - start].get();
  }
  std::vector<CheckResult> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of p-DG and quantum Frobenius identities"};
  app.require_subcommand(1, 1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> numeric = {
      {"p", "prime"},
      {"n", "number of variables; weight range |n| for verify-frobenius"},
      {"a", "first block size or twist"},
      {"b", "second block size"},
      {"i", "shift i of V_i"},
      {"k", "V_i lives on P(i, kp - i); degree of e'_k for verify-theta0"},
      {"cap", "degree cap"},
      {"max", "largest exponent in range checks"},
      {"jobs", "worker threads"},
  };
  for (const auto& name : pdg::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, "run " + name);
    for (const auto& [key, help] : numeric) {
      const auto& keys = pdg::subcommand_keys(name);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) continue;
      sub->add_option_function<long>("--" + key, [&flags, key = key](long v) { flags.values[key] = v; }, help);
    }
    sub->add_option("--json", flags.json_path, "write a JSON report to this path");
    sub->add_option("--config", flags.config_path,
                    std::string("config file (default: $") + kConfigEnv + " or " + PDG_DEFAULT_CONFIG + ")");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::vector<CheckResult> results;
  try {
    auto cfg = pdg::load_config(config_path(flags));
    if (name == "report-all")
      results = report_all(cfg, flags);
    else
      results = pdg::run_subcommand(name, merged(cfg, name, flags));
  } catch (const pdg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  print_table(results);
  if (!flags.json_path.empty()) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) j.push_back(r.to_json());
    std::ofstream out(flags.json_path);
    if (!out) {
      std::cerr << "cannot write " << flags.json_path << "\n";
      return 2;
    }
    out << j.dump(2) << "\n";
  }
  bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass(); });
  return all ? 0 : 1;
}

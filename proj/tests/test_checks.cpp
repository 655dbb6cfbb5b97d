#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "pdg/checks.hpp"

using namespace pdg;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + PDGVERIFY_PATH + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Config, ParsesSectionsAndComments) {
  auto path = temp_file("pdg_cfg_ok.conf", "# header\nverify-slash.p = 3\n\nverify-slash.cap=40  # trailing\nreport-all.jobs = 2\n");
  auto cfg = load_config(path.string());
  EXPECT_EQ(cfg.at("verify-slash").at("p"), 3);
  EXPECT_EQ(cfg.at("verify-slash").at("cap"), 40);
  EXPECT_EQ(cfg.at("report-all").at("jobs"), 2);
}

TEST(Config, RejectsMalformedLines) {
  auto path = temp_file("pdg_cfg_bad.conf", "verify-slash.p three\n");
  EXPECT_THROW(load_config(path.string()), UsageError);
  EXPECT_THROW(load_config("/nonexistent/pdg.conf"), UsageError);
}

TEST(Config, DefaultsCoverEverySubcommand) {
  auto cfg = load_config(std::string(PDG_SOURCE_DIR) + "/config/defaults.conf");
  for (const auto& name : subcommands()) EXPECT_TRUE(cfg.count(name)) << name;
}

TEST(Subcommands, Registry) {
  const auto& names = subcommands();
  for (const char* n : {"verify-slash", "verify-twist", "verify-lima", "verify-vi", "verify-binom", "verify-nilhecke",
                        "verify-thick", "verify-grass", "verify-frobenius", "verify-theta0", "report-all"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_THROW(run_subcommand("verify-nothing", {}), UsageError);
  EXPECT_THROW(run_subcommand("verify-slash", {{"p", 4}, {"n", 2}, {"cap", 10}}), UsageError);
  EXPECT_THROW(run_subcommand("verify-slash", {{"p", 3}}), UsageError);
}

TEST(Subcommands, Examples) {
  auto lima = run_subcommand("verify-lima", {{"p", 2}, {"a", 1}, {"b", 1}});
  ASSERT_FALSE(lima.empty());
  for (const auto& r : lima) EXPECT_TRUE(r.pass()) << r.to_json().dump();
  EXPECT_EQ(lima.front().values.at("dim"), 2);

  auto binom = run_subcommand("verify-binom", {{"p", 5}, {"max", 3}});
  for (const auto& r : binom) EXPECT_TRUE(r.pass()) << r.to_json().dump();

  auto slash = run_subcommand("verify-slash", {{"p", 3}, {"n", 2}, {"cap", 40}});
  for (const auto& r : slash) EXPECT_TRUE(r.pass()) << r.to_json().dump();
}

TEST(Subcommands, ReportIsDeterministic) {
  auto a = run_subcommand("verify-grass", {{"p", 2}, {"a", 1}, {"b", 1}, {"cap", 32}});
  auto b = run_subcommand("verify-grass", {{"p", 2}, {"a", 1}, {"b", 1}, {"cap", 32}});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].params, b[i].params);
    EXPECT_EQ(a[i].values, b[i].values);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify-lima --p 2 --a 1 --b 1").code, 0);
  EXPECT_EQ(run_cli("verify-binom --p 5 --max 3").code, 0);
  EXPECT_EQ(run_cli("verify-slash --p 3 --n 2 --cap 40").code, 0);
  EXPECT_EQ(run_cli("verify-nothing").code, 2);
  EXPECT_EQ(run_cli("verify-slash --p 4 --n 2 --cap 40").code, 2);
  EXPECT_EQ(run_cli("verify-slash --p x").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
}

TEST(Cli, JsonReport) {
  auto path = std::filesystem::temp_directory_path() / "pdg_report.json";
  std::filesystem::remove(path);
  ASSERT_EQ(run_cli("verify-lima --p 2 --a 1 --b 1 --json " + path.string()).code, 0);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  for (const auto& r : j)
    for (const char* key : {"check", "params", "status", "values", "ms"}) EXPECT_TRUE(r.contains(key)) << key;
  EXPECT_EQ(j[0]["status"], "pass");
}

TEST(Cli, ConfigFromEnvironment) {
  auto path = temp_file("pdg_cfg_env.conf", "verify-lima.p = 2\nverify-lima.a = 1\nverify-lima.b = 1\n");
  auto r = run_cli("verify-lima", "PDG_CONFIG=" + path.string());
  EXPECT_EQ(r.code, 0) << r.out;
  auto bad = temp_file("pdg_cfg_env_bad.conf", "verify-lima.p = 4\nverify-lima.a = 1\nverify-lima.b = 1\n");
  EXPECT_EQ(run_cli("verify-lima", "PDG_CONFIG=" + bad.string()).code, 2);
  // Flags override the config file.
  EXPECT_EQ(run_cli("verify-lima --p 2", "PDG_CONFIG=" + bad.string()).code, 0);
}

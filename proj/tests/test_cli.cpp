#include "fixtures.hpp"

#include "tgha/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace tgha;
using cli::SessionConfig;

namespace {

SessionConfig session(const std::string& group, const std::string& cocycle) {
  SessionConfig cfg;
  cfg.group_file = fixtures::data(group);
  cfg.cocycle = cocycle;
  return cfg;
}

SessionConfig diag3() {
  SessionConfig cfg = session("diag3_l3.group", "elem-abelian");
  cfg.seeds = {"g1=1", "g2=1", "g1*g1*g2*g2=1"};
  return cfg;
}

} // namespace

TEST_CASE("classify") {
  SessionConfig cfg = diag3();
  cfg.json = true;
  const auto r = cli::run("classify", cfg);
  CHECK(r.exit_code == cli::kOk);
  const auto j = nlohmann::json::parse(r.text);
  CHECK(j["d"] == 3);
  CHECK(j["inv2dim"] == 0);
  CHECK(j["total"] == 3);
  CHECK(j["order"] == 9);
  // deterministic output
  CHECK(cli::run("classify", cfg).text == r.text);
  cfg.json = false;
  CHECK(cli::run("classify", cfg).text == cli::run("classify", cfg).text);
}

TEST_CASE("exit codes") {
  CHECK(cli::run("classify", session("missing.group", "trivial")).exit_code == cli::kParse);
  CHECK(cli::run("classify", session("diag3_l3.group", "nonsense")).exit_code == cli::kParse);
  CHECK(cli::run("frobnicate", diag3()).exit_code == cli::kParse);

  const std::string table = "/tmp/tgha_test_bad.cocycle";
  {
    const auto G = fixtures::group("diag3_l3.group");
    std::vector<int> exps(G->order() * G->order(), 0);
    exps[G->order() + 2] = 1;
    std::ofstream(table) << write_cocycle_table(TwoCocycle::from_exponents(G, exps));
  }
  CHECK(cli::run("classify", session("diag3_l3.group", "table:" + table)).exit_code == cli::kCocycle);
  std::filesystem::remove(table);

  SessionConfig bad = session("diag3_l3.group", "elem-abelian");
  bad.forms_file = fixtures::data("diag3_l3_bad.forms");
  CHECK(cli::run("verify", bad).exit_code == cli::kFamily);
  bad.force = true;
  CHECK(cli::run("pbw-check", bad).exit_code == cli::kFamily);

  SessionConfig seeds = diag3();
  seeds.seeds = {"g1*g1=1"};
  CHECK(cli::run("forms", seeds).exit_code == cli::kFamily);
  seeds.seeds = {"g1=oops"};
  CHECK(cli::run("forms", seeds).exit_code == cli::kParse);
}

TEST_CASE("verify, forms and multiply") {
  SessionConfig cfg = diag3();
  const auto forms = cli::run("forms", cfg);
  CHECK(forms.exit_code == cli::kOk);
  CHECK(forms.text.find("form g1") != std::string::npos);
  const std::string path = "/tmp/tgha_test_diag3.forms";
  std::ofstream(path) << forms.text;
  SessionConfig check = session("diag3_l3.group", "elem-abelian");
  check.forms_file = path;
  CHECK(cli::run("verify", check).exit_code == cli::kOk);
  std::filesystem::remove(path);

  cfg.expressions = {"v2*v1"};
  const auto m = cli::run("multiply", cfg);
  CHECK(m.exit_code == cli::kOk);
  CHECK(m.text.find("v1*v2 - [g1]*t") != std::string::npos);
  cfg.expressions = {"g1", "g2"};
  CHECK(cli::run("multiply", cfg).text.find("(-1-z^1)*[g1*g2]") != std::string::npos);
  cfg.expressions = {"v5"};
  CHECK(cli::run("multiply", cfg).exit_code == cli::kParse);
}

TEST_CASE("mu and pbw-check") {
  SessionConfig cfg = diag3();
  cfg.expressions = {"v3*v2", "v1"};
  CHECK(cli::run("mu", cfg).exit_code == cli::kOk);
  cfg.expressions = {};
  cfg.bound = 2;
  cfg.json = true;
  const auto r = cli::run("pbw-check", cfg);
  CHECK(r.exit_code == cli::kOk);
  const auto j = nlohmann::json::parse(r.text);
  CHECK(j["pbw"] == true);
  CHECK(j["associativity"] == true);
}

TEST_CASE("lusztig") {
  SessionConfig cfg;
  cfg.root_type = "B2";
  cfg.k = "1";
  cfg.k2 = "2";
  cfg.check = true;
  cfg.bound = 1;
  CHECK(cli::run("lusztig", cfg).exit_code == cli::kOk);
  cfg.root_type = "E8";
  CHECK(cli::run("lusztig", cfg).exit_code != cli::kOk);
}

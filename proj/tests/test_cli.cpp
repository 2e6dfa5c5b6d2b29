// End-to-end tests that drive the installed CLI binary through a shell, the
// way a user would. The binary path is baked in by the build.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "degseq/bipoly.hpp"
#include "degseq/sequences.hpp"

using degseq::ArgumentMode;
using degseq::BiPoly;
using degseq::Rational;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(DEGSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("gen emits the degenerate daehee table") {
  CliResult r = run_cli("gen --family degen-daehee --nmax 4");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["family"] == "degen-daehee");
  CHECK(j["order"] == 1);
  CHECK(j["argument"] == "number");
  REQUIRE(j["terms"].size() == 5);
  CHECK(j["terms"][0]["value"] == "1");
  CHECK(j["terms"][1]["value"] == "-1/2 + 1/2*λ");
}

TEST_CASE("gen evaluates classical daehee numbers at x = 0") {
  CliResult r = run_cli("gen --family daehee --nmax 3 --x 0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  std::vector<std::string> expect = {"1", "-1/2", "2/3", "-3/2"};
  for (int n = 0; n <= 3; ++n) CHECK(j["terms"][n]["value"] == expect[n]);
}

TEST_CASE("gen at lambda 0 reduces to the classical prefix") {
  CliResult r = run_cli("gen --family degen-daehee --nmax 2 --lambda 0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["terms"][0]["value"] == "1");
  CHECK(j["terms"][1]["value"] == "-1/2");
  CHECK(j["terms"][2]["value"] == "2/3");
}

TEST_CASE("gen output round-trips through the polynomial parser") {
  CliResult r = run_cli("gen --family degen-bernoulli --nmax 6 --x x");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["argument"] == "polynomial");
  auto expect = degseq::degen_bernoulli(1, 6, ArgumentMode::polynomial);
  for (int n = 0; n <= 6; ++n) {
    BiPoly parsed = BiPoly::parse(j["terms"][n]["value"].get<std::string>());
    CHECK(parsed == expect[n]);
  }
}

TEST_CASE("gen handles rational flag values") {
  CliResult r = run_cli("gen --family degen-daehee --nmax 3 --lambda 1/2 --x 1/3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  auto expect = degseq::degen_daehee(3, ArgumentMode::polynomial);
  for (int n = 0; n <= 3; ++n) {
    BiPoly v = expect[n].eval_x(Rational(1, 3)).eval_lambda(Rational(1, 2));
    CHECK(j["terms"][n]["value"] == v.to_string());
  }
}

TEST_CASE("gen norlund defaults to the symbolic exponent") {
  CliResult r = run_cli("gen --family norlund-second --nmax 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["argument"] == "polynomial");
  auto expect = degseq::norlund_second(std::nullopt, 3);
  for (int n = 0; n <= 3; ++n) CHECK(j["terms"][n]["value"] == expect[n].to_string());

  CliResult r1 = run_cli("gen --family norlund-second --nmax 3 --x 1");
  json j1 = json::parse(r1.out);
  CHECK(j1["terms"][1]["value"] == "1/2");
  CHECK(j1["terms"][2]["value"] == "-1/12");
}

TEST_CASE("gen order flags") {
  CliResult r = run_cli("gen --family daehee-higher --k 2 --nmax 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["order"] == 2);
  auto expect = degseq::daehee_poly(2, 2, ArgumentMode::number);
  for (int n = 0; n <= 2; ++n) CHECK(j["terms"][n]["value"] == expect[n].to_string());

  CHECK(run_cli("gen --family daehee-higher --r 2 --nmax 2").exit_code == 2);  // wrong flag
  CHECK(run_cli("gen --family bernoulli-higher --r 3 --nmax 2").exit_code == 0);
  CHECK(run_cli("gen --family bernoulli --r 2 --nmax 2").exit_code == 2);
}

TEST_CASE("gen csv requires constants") {
  CliResult r = run_cli("gen --family degen-daehee --nmax 3 --lambda 1/2 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, 8) == "n,value\n");
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 5);  // header + 4 rows

  CHECK(run_cli("gen --family degen-daehee --nmax 3 --format csv").exit_code == 2);  // symbolic lambda
  CliResult classical = run_cli("gen --family daehee --nmax 3 --format csv");
  CHECK(classical.exit_code == 0);  // already constant without flags
}

TEST_CASE("gen usage errors") {
  CHECK(run_cli("gen --family no-such --nmax 2").exit_code == 2);
  CHECK(run_cli("gen --family daehee --nmax 2 --lambda 1/2").exit_code == 2);  // lambda-free family
  CHECK(run_cli("gen --family multiple-degen-daehee --k 2 --nmax 2 --x 1").exit_code == 2);
  CHECK(run_cli("gen --family daehee").exit_code == 2);  // missing --nmax
  CHECK(run_cli("gen --family degen-daehee --nmax 4 --series-order 3").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("gen output is byte-deterministic and --out matches stdout") {
  std::string args = "gen --family degen-bernoulli --nmax 5";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.out == b.out);

  std::string path = "/tmp/degseq_cli_test_out.json";
  CliResult c = run_cli(args + " --out " + path);
  REQUIRE(c.exit_code == 0);
  CHECK(c.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::string file_text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(file_text == a.out);
  std::remove(path.c_str());
}

TEST_CASE("check runs a single identity") {
  CliResult r = run_cli("check --id T8 --rmax 3 --nmax 8");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "T8");
  CHECK(j[0]["status"] == "pass");
}

TEST_CASE("check reports the T7 variant") {
  CliResult r = run_cli("check --id T7 --nmax 8");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j[0]["status"] == "variant_matched");
  std::string variant = j[0]["variant"].get<std::string>();
  CHECK(variant.find("m = 1..n+1") != std::string::npos);
}

TEST_CASE("check --all on a reduced grid") {
  CliResult r = run_cli("check --all --nmax 6 --rmax 2 --kmax 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 13);
  for (const auto& rep : j) {
    CHECK(rep["status"] != "fail");
  }
}

TEST_CASE("check accepts the limit-corollary id in both spellings") {
  CliResult quoted = run_cli("check --id \"C2'\" --nmax 6");
  REQUIRE(quoted.exit_code == 0);
  json j = json::parse(quoted.out);
  CHECK(j[0]["id"] == "C2'");
  CliResult alias = run_cli("check --id C2 --nmax 6");
  REQUIRE(alias.exit_code == 0);
  CHECK(json::parse(alias.out)[0]["id"] == "C2'");
}

TEST_CASE("check usage errors") {
  CHECK(run_cli("check").exit_code == 2);
  CHECK(run_cli("check --all --id T1").exit_code == 2);
  CHECK(run_cli("check --id T99").exit_code == 2);
  CHECK(run_cli("check --all --nmax 40").exit_code == 2);
  CHECK(run_cli("check --all --format csv").exit_code == 2);
}

TEST_CASE("limit compares degenerate against classical") {
  CliResult r = run_cli("limit --family degen-bernoulli --nmax 6");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["classical"] == "bernoulli");
  CHECK(j["all_equal"] == true);
  REQUIRE(j["rows"].size() == 7);
  for (const auto& row : j["rows"]) CHECK(row["equal"] == true);
}

TEST_CASE("limit at nmax 0 emits the single trivial row") {
  CliResult r = run_cli("limit --family degen-daehee --nmax 0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["degenerate_at_lambda0"] == "1");
  CHECK(j["rows"][0]["classical"] == "1");
}

TEST_CASE("limit multiple-degen-daehee collapses onto the degen-daehee column") {
  CliResult multiple = run_cli("limit --family multiple-degen-daehee --k 1 --nmax 6");
  CliResult plain = run_cli("limit --family degen-daehee --nmax 6");
  REQUIRE(multiple.exit_code == 0);
  REQUIRE(plain.exit_code == 0);
  json jm = json::parse(multiple.out);
  json jp = json::parse(plain.out);
  CHECK(jm["all_equal"] == true);
  for (int n = 0; n <= 6; ++n) {
    CHECK(jm["rows"][n]["degenerate_at_lambda0"] == jp["rows"][n]["degenerate_at_lambda0"]);
  }
}

TEST_CASE("limit rejects families without a classical counterpart") {
  CHECK(run_cli("limit --family bernoulli --nmax 4").exit_code == 2);
  CHECK(run_cli("limit --family norlund-second --nmax 4").exit_code == 2);
}

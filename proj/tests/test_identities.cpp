#include <doctest.h>

#include <json.hpp>
#include <stdexcept>

#include "degseq/identities.hpp"
#include "degseq/json_io.hpp"
#include "degseq/sequences.hpp"

using degseq::CheckConfig;
using degseq::CheckReport;
using degseq::CheckStatus;

namespace {

// A reduced grid keeps the unit suite quick; the acceptance suite runs the
// full one.
CheckConfig small_grid() {
  CheckConfig cfg;
  cfg.nmax = 8;
  cfg.rmax = 3;
  cfg.kmax = 3;
  cfg.nmax_higher = 6;
  return cfg;
}

}  // namespace

TEST_CASE("every check passes on the reduced grid") {
  CheckConfig cfg = small_grid();
  for (const std::string& id : degseq::identity_ids()) {
    CheckReport rep = degseq::run_check(id, cfg);
    CAPTURE(id);
    CHECK(rep.ok());
    if (rep.status == CheckStatus::pass) CHECK_FALSE(rep.first_failure.has_value());
    if (id == "T7" || id == "E6") {
      CHECK(rep.status == CheckStatus::variant_matched);
      CHECK(rep.variant.has_value());
    }
  }
}

TEST_CASE("T7 confirms the derivation range") {
  CheckReport rep = degseq::check_T7(small_grid());
  CHECK(rep.status == CheckStatus::variant_matched);
  REQUIRE(rep.variant.has_value());
  CHECK(rep.variant->find("m = 1..n+1") != std::string::npos);
}

TEST_CASE("E6 confirms the varying-index reading") {
  CheckReport rep = degseq::check_E6(small_grid());
  CHECK(rep.status == CheckStatus::variant_matched);
  REQUIRE(rep.variant.has_value());
  CHECK(rep.variant->find("reading (b)") != std::string::npos);
}

TEST_CASE("T11 records the corrected-index note") {
  CheckReport rep = degseq::check_T11(small_grid());
  CHECK(rep.status == CheckStatus::pass);
  REQUIRE(rep.variant.has_value());
  CHECK(rep.variant->find("corrected indices") != std::string::npos);
}

TEST_CASE("run_all reports in registration order and deterministically") {
  CheckConfig cfg = small_grid();
  auto reports = degseq::run_all(cfg);
  REQUIRE(reports.size() == 13);
  const auto& ids = degseq::identity_ids();
  for (size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].id == ids[i]);
  CHECK(degseq::all_passed(reports));

  auto again = degseq::run_all(cfg);
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == again[i].id);
    CHECK(reports[i].status == again[i].status);
    CHECK(reports[i].variant == again[i].variant);
    CHECK(reports[i].params == again[i].params);
  }
}

TEST_CASE("run_all at nmax 0 passes trivially") {
  CheckConfig cfg;
  cfg.nmax = 0;
  auto reports = degseq::run_all(cfg);
  REQUIRE(reports.size() == 13);
  CHECK(degseq::all_passed(reports));
}

TEST_CASE("harness flags a tampered sequence") {
  // An off-by-one injected into one term must surface as a fail with the
  // offending point recorded.
  auto good = degseq::degen_daehee_closed(6, degseq::ArgumentMode::number);
  auto bad = good;
  bad[3] += degseq::BiPoly::constant(degseq::Rational(1));
  std::vector<degseq::Comparison> comps;
  for (int n = 0; n <= 6; ++n) {
    comps.push_back({{{"n", n}}, good[n], bad[n]});
  }
  CheckReport rep = degseq::evaluate_comparisons("tamper", {{"nmax", 6}}, comps);
  CHECK(rep.status == CheckStatus::fail);
  REQUIRE(rep.first_failure.has_value());
  CHECK(rep.first_failure->point.at("n") == 3);
  CHECK(rep.first_failure->lhs != rep.first_failure->rhs);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(degseq::all_passed({rep}));
}

TEST_CASE("single checks and id handling") {
  CheckConfig cfg = small_grid();
  CheckReport t8 = degseq::run_check("T8", cfg);
  CHECK(t8.id == "T8");
  CHECK(t8.status == CheckStatus::pass);
  CHECK(t8.params.at("rmax") == 3);

  CheckReport c2 = degseq::run_check("C2", cfg);  // alias
  CHECK(c2.id == "C2'");

  CHECK_THROWS_AS(degseq::run_check("T99", cfg), std::invalid_argument);
}

TEST_CASE("config validation") {
  CheckConfig cfg;
  cfg.nmax = 13;
  CHECK_THROWS_AS(degseq::run_all(cfg), std::invalid_argument);
  cfg = CheckConfig{};
  cfg.rmax = 5;
  CHECK_THROWS_AS(degseq::run_all(cfg), std::invalid_argument);
  cfg = CheckConfig{};
  cfg.series_order = 10;  // below nmax + rmax + 1
  CHECK_THROWS_AS(degseq::run_all(cfg), std::invalid_argument);
}

TEST_CASE("report json shape") {
  CheckConfig cfg = small_grid();
  std::vector<CheckReport> reports = {degseq::run_check("T7", cfg), degseq::run_check("T1", cfg)};
  auto parsed = nlohmann::json::parse(degseq::reports_to_json(reports));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["id"] == "T7");
  CHECK(parsed[0]["status"] == "variant_matched");
  CHECK(parsed[0].contains("variant"));
  CHECK(parsed[0]["params"]["kmax"] == 3);
  CHECK(parsed[1]["id"] == "T1");
  CHECK(parsed[1]["status"] == "pass");
  CHECK_FALSE(parsed[1].contains("first_failure"));

  // a failing report serializes its first_failure block
  CheckReport fail = degseq::evaluate_comparisons(
      "demo", {},
      {{{{"n", 2}}, degseq::BiPoly::constant(degseq::Rational(1)), degseq::BiPoly::constant(degseq::Rational(2))}});
  auto fj = nlohmann::json::parse(degseq::reports_to_json({fail}));
  CHECK(fj[0]["status"] == "fail");
  CHECK(fj[0]["first_failure"]["params"]["n"] == 2);
  CHECK(fj[0]["first_failure"]["lhs"] == "1");
  CHECK(fj[0]["first_failure"]["rhs"] == "2");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "qstirling/error.hpp"
#include "qstirling/verify.hpp"

using namespace qstirling;

TEST_CASE("suite names") {
  for (const char* name : {"identities", "formulas", "paths", "bijections", "hypergeometric", "proof-steps", "all"})
    CHECK(std::string(to_string(parse_suite(name))) == name);
  CHECK_THROWS_AS(parse_suite("none"), Error);
  CHECK_THROWS_AS(run_suite(Suite::Formulas, -1), Error);
}

TEST_CASE("small suites pass") {
  for (auto s : {Suite::Identities, Suite::Formulas, Suite::Paths, Suite::Bijections, Suite::ProofSteps}) {
    const auto r = run_suite(s, 5);
    CHECK(r.checks.size() > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("json report") {
  const auto r = run_suite(Suite::ProofSteps, 4);
  const auto doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc["suite"] == "proof-steps");
  CHECK(doc["nmax"] == 4);
  CHECK(doc["summary"]["total"] == r.checks.size());
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["checks"].size() == r.checks.size());
  CHECK_FALSE(doc.contains("wall_seconds"));
  CHECK(report_to_json(r) == report_to_json(run_suite(Suite::ProofSteps, 4)));
}

TEST_CASE("failures are reported, not thrown") {
  VerifyReport r;
  r.checks.push_back({"made_up", "n=1", false, "1", "2"});
  r.checks.push_back({"fine", "n=1", true, "1", "1"});
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.ok());
  const std::string text = report_to_text(r);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("made_up") != std::string::npos);
  CHECK(text.find("fine") == std::string::npos);
}

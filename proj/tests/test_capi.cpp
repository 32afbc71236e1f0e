// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "qstirling/qstirling.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s;
  qs_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("values and polynomial handles") {
  qs_poly* p = nullptr;
  REQUIRE(qs_stirling(2, 4, 2, "closed", &p) == QS_OK);
  char* text = nullptr;
  REQUIRE(qs_poly_to_string(p, &text) == QS_OK);
  CHECK(take(text) == "q + 6");
  REQUIRE(qs_poly_eval(p, 10, &text) == QS_OK);
  CHECK(take(text) == "16");
  REQUIRE(qs_poly_to_json(p, &text) == QS_OK);
  CHECK(take(text) == "[\"6\",\"1\"]");
  long degree = -5;
  REQUIRE(qs_poly_degree(p, &degree) == QS_OK);
  CHECK(degree == 1);

  qs_poly* parsed = nullptr;
  REQUIRE(qs_poly_parse("q + 6", &parsed) == QS_OK);
  CHECK(qs_poly_equal(p, parsed));
  qs_poly* other = nullptr;
  REQUIRE(qs_stirling(2, 4, 2, nullptr, &other) == QS_OK);
  CHECK(qs_poly_equal(p, other));
  qs_poly_free(other);
  qs_poly_free(parsed);
  qs_poly_free(p);
}

TEST_CASE("status codes") {
  qs_poly* p = nullptr;
  CHECK(qs_stirling(3, 1, 1, "closed", &p) == QS_INVALID_ARGUMENT);
  CHECK(std::string(qs_last_error()).size() > 0);
  CHECK(qs_stirling(1, 2, 1, "magic", &p) == QS_INVALID_ARGUMENT);
  CHECK(qs_stirling(1, 11, 3, "enum", &p) == QS_BOUND_EXCEEDED);
  CHECK(qs_stirling(1, 2, 1, "closed", nullptr) == QS_INVALID_ARGUMENT);
  CHECK(qs_poly_parse("q^", &p) == QS_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  REQUIRE(qs_stirling(1, 2, 1, "closed", &p) == QS_OK);
  CHECK(std::string(qs_last_error()).empty());
  qs_poly_free(p);
  CHECK(std::string(qs_status_message(QS_POLE_IN_RANGE)).size() > 0);
  char* out = nullptr;
  CHECK(qs_table(1, 3, "closed", "xml", &out) == QS_INVALID_ARGUMENT);
  CHECK(qs_table(1, -1, "closed", "csv", &out) == QS_INVALID_ARGUMENT);
  CHECK(qs_table_json_to_csv("[1,2", &out) == QS_INVALID_ARGUMENT);
  qs_report* r = nullptr;
  CHECK(qs_verify("nothing", 3, &r) == QS_INVALID_ARGUMENT);
}

TEST_CASE("tables round trip through json") {
  char* csv = nullptr;
  char* json = nullptr;
  REQUIRE(qs_table(1, 5, "path", "csv", &csv) == QS_OK);
  REQUIRE(qs_table(1, 5, "closed", "json", &json) == QS_OK);
  char* back = nullptr;
  REQUIRE(qs_table_json_to_csv(json, &back) == QS_OK);
  CHECK(take(back) == take(csv));
  qs_string_free(json);
}

TEST_CASE("verify reports") {
  qs_report* r = nullptr;
  REQUIRE(qs_verify("hypergeometric", 0, &r) == QS_OK);
  CHECK(qs_report_total(r) >= 300);
  CHECK(qs_report_failed(r) == 0);
  CHECK(qs_report_wall_seconds(r) >= 0.0);
  char* text = nullptr;
  REQUIRE(qs_report_to_json(r, &text) == QS_OK);
  CHECK(take(text).find("\"failed\": 0") != std::string::npos);
  REQUIRE(qs_report_to_text(r, &text) == QS_OK);
  CHECK(take(text).size() > 0);
  qs_report_free(r);
  qs_report_free(nullptr);
}

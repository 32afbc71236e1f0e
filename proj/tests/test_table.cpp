#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qstirling/error.hpp"
#include "qstirling/table.hpp"

using namespace qstirling;

TEST_CASE("method and format names") {
  for (const char* name : {"enum", "closed", "closed-alt", "path", "identity"})
    CHECK(std::string(to_string(parse_method(name))) == name);
  CHECK_THROWS_AS(parse_method("guess"), Error);
  CHECK(parse_format("latex") == TableFormat::Latex);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("every method yields the same triangle") {
  for (auto kind : {StirlingKind::First, StirlingKind::Second}) {
    const auto reference = compute_triangle(kind, 7, Method::Enum);
    for (auto m : {Method::Closed, Method::ClosedAlt, Method::Path, Method::Identity})
      CHECK(compute_triangle(kind, 7, m).rows == reference.rows);
  }
}

TEST_CASE("single values") {
  CHECK(stirling_value(StirlingKind::Second, 4, 2, Method::Path) == QPoly{6, 1});
  CHECK(stirling_value(StirlingKind::First, 4, 1, Method::Identity) == QPoly{1, 2, 2, 1});
  CHECK_THROWS_AS(stirling_value(StirlingKind::First, 3, 5, Method::Closed), Error);
  CHECK_THROWS_AS(stirling_value(StirlingKind::First, -1, 0, Method::Closed), Error);
  CHECK_THROWS_AS(stirling_value(StirlingKind::Second, 0, 0, Method::ClosedAlt), Error);
  CHECK(compute_triangle(StirlingKind::Second, 0, Method::ClosedAlt).at(0, 0) == QPoly(1));
}

TEST_CASE("csv") {
  CHECK(render_csv(compute_triangle(StirlingKind::First, 0, Method::Closed)) == "n,k,poly\n0,0,1\n");
  const std::string csv = render_csv(compute_triangle(StirlingKind::First, 4, Method::Closed));
  CHECK(csv.find("\n4,1,q^3 + 2*q^2 + 2*q + 1\n") != std::string::npos);
  CHECK(csv.find("\n4,0,0\n") != std::string::npos);
}

TEST_CASE("json round trip") {
  const auto t = compute_triangle(StirlingKind::Second, 6, Method::Closed);
  const std::string text = render_json(t);
  CHECK(text.rfind("{\"kind\":2,\"nmax\":6,\"rows\":", 0) == 0);
  const auto back = parse_json_table(text);
  CHECK(back.kind == t.kind);
  CHECK(back.nmax == 6);
  CHECK(back.rows == t.rows);
  CHECK(render_csv(back) == render_csv(t));
  CHECK(qpoly_to_json(QPoly{6, 1}) == "[\"6\",\"1\"]");
  CHECK_THROWS_AS(parse_json_table("{"), Error);
  CHECK_THROWS_AS(parse_json_table("{\"kind\":3,\"nmax\":0,\"rows\":[[[\"1\"]]]}"), Error);
  CHECK_THROWS_AS(parse_json_table("{\"kind\":1,\"nmax\":1,\"rows\":[[[\"1\"]]]}"), Error);
}

TEST_CASE("latex") {
  const std::string tex = render_latex(compute_triangle(StirlingKind::Second, 2, Method::Closed));
  CHECK(tex ==
        "\\begin{tabular}{c|c|c|c|}\n"
        "$n \\backslash k$ & 0 & 1 & 2 \\\\ \\hline\n"
        "0 & 1 & . & . \\\\ \\hline\n"
        "1 & 0 & 1 & . \\\\ \\hline\n"
        "2 & 0 & 1 & 1 \\\\ \\hline\n"
        "\\end{tabular}\n");
  const std::string bigger = render_latex(compute_triangle(StirlingKind::Second, 4, Method::Closed));
  CHECK(bigger.find("$q + 6$") != std::string::npos);
}

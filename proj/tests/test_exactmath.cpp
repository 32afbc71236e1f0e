#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qstirling/error.hpp"
#include "qstirling/exactmath.hpp"

using namespace qstirling;

namespace {

// Every polynomial of degree <= 2 with coefficients in {-1, 0, 1}.
std::vector<QPoly> small_polys() {
  std::vector<QPoly> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) out.push_back(QPoly{a, b, c});
  return out;
}

}  // namespace

TEST_CASE("poly_add examples") {
  CHECK(poly_add(QPoly{1, 1}, QPoly{1, -1}) == QPoly(2));
  const QPoly p{3, 0, 5};
  CHECK(poly_add(QPoly(), p) == p);
  const auto zero = poly_add(QPoly{0, 1}, QPoly{0, -1});
  CHECK(zero.is_zero());
  CHECK(zero.coefficients().empty());
  CHECK_FALSE(zero.degree().has_value());
}

TEST_CASE("trailing zeros are trimmed") {
  const QPoly p{1, 2, 0, 0};
  CHECK(p.coefficients().size() == 2);
  CHECK(p.degree() == 1);
  CHECK(QPoly{0, 0}.is_zero());
}

TEST_CASE("ring axioms on all small polynomials") {
  const auto polys = small_polys();
  for (const auto& a : polys) {
    CHECK(a + QPoly() == a);
    CHECK(a * QPoly(1) == a);
    CHECK((a - a).is_zero());
    for (const auto& b : polys) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : polys) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("multiplication agrees with evaluation") {
  const QPoly a{3, -2, 0, 7};
  const QPoly b{-1, 4, 9};
  for (long t : {-3, -1, 0, 1, 2, 5, 17}) {
    CHECK(poly_eval_int(poly_mul(a, b), t) == poly_eval_int(a, t) * poly_eval_int(b, t));
  }
}

TEST_CASE("poly_eval_int") {
  CHECK(poly_eval_int(QPoly{1, 2, 1}, 3) == 16);
  CHECK(poly_eval_int(QPoly(), 5) == 0);
  CHECK(poly_eval_int(QPoly{4, 1}, 0) == 4);
}

TEST_CASE("exact division") {
  const QPoly a{1, 1};
  const QPoly b{2, 0, -3, 1};
  CHECK(poly_divide_exact(a * b, a) == b);
  CHECK(poly_divide_exact(a * b, b) == a);
  CHECK(poly_divide_exact(QPoly(), a).is_zero());
  CHECK(poly_divide_exact(one_minus_q_power(5), one_minus_q_power(2)) == one_minus_q_power(3));

  try {
    poly_divide_exact(QPoly{1, 0, 1}, QPoly{1, 1});
    FAIL("expected NonzeroRemainder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroRemainder);
  }
  try {
    poly_divide_exact(QPoly{1}, QPoly());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  // integer quotient required, not rational
  CHECK_THROWS_AS(poly_divide_exact(QPoly{1, 1}, QPoly(2)), Error);
}

TEST_CASE("large coefficients do not overflow") {
  QPoly p{1, 1};
  QPoly power(1);
  for (int i = 0; i < 100; ++i) power *= p;
  // the middle binomial C(100,50) exceeds 64 bits
  BigInt expected("100891344545564193334812497256", 10);
  CHECK(power.coeff(50) == expected);
  CHECK(poly_eval_int(power, 1) == BigInt(1) << 100);
}

TEST_CASE("canonical rendering") {
  CHECK(to_string(QPoly{1, 2, 2, 1}) == "q^3 + 2*q^2 + 2*q + 1");
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(QPoly{0, 1}) == "q");
  CHECK(to_string(QPoly{-1, 0, -3}) == "-3*q^2 - 1");
  CHECK(to_string(QPoly{1, -1}) == "-q + 1");
  CHECK(to_string(QPoly(-7)) == "-7");
}

TEST_CASE("parsing inverts rendering") {
  for (const auto& p : small_polys()) CHECK(parse_qpoly(to_string(p)) == p);
  const QPoly big{175, 126, 42, 7};
  CHECK(parse_qpoly(to_string(big)) == big);
  CHECK(parse_qpoly("  2q +1 ") == QPoly{1, 2});
  CHECK(parse_qpoly("1 + q^2 - q^2") == QPoly(1));
  CHECK_THROWS_AS(parse_qpoly("q^"), Error);
  CHECK_THROWS_AS(parse_qpoly("x + 1"), Error);
  CHECK_THROWS_AS(parse_qpoly(""), Error);
}

TEST_CASE("latex rendering") {
  CHECK(to_latex(QPoly{1, 2, 2, 1}) == "q^{3} + 2q^{2} + 2q + 1");
  CHECK(to_latex(QPoly(6)) == "6");
}

TEST_CASE("q-integers and powers of 1-q") {
  CHECK(QPoly::q_integer(3) == QPoly{1, 1, 1});
  CHECK(QPoly::q_integer(0).is_zero());
  CHECK(one_minus_q_power(0) == QPoly(1));
  CHECK(one_minus_q_power(2) == QPoly{1, -2, 1});
}

TEST_CASE("xqpoly coefficients") {
  const XQPoly p = XQPoly::monomial(QPoly{1, 1}, 1) + XQPoly::monomial(QPoly(3), 2) + XQPoly::monomial(QPoly(1), 3);
  CHECK(xqpoly_coeff(p, 1) == QPoly{1, 1});
  CHECK(xqpoly_coeff(p, 2) == QPoly(3));
  CHECK(xqpoly_coeff(p, 0).is_zero());
  CHECK(xqpoly_coeff(p, 9).is_zero());
  CHECK(p.degree() == 3);
  CHECK((p - p).is_zero());
  const XQPoly x = XQPoly::x();
  CHECK((x + XQPoly(QPoly(1))) * (x - XQPoly(QPoly(1))) == x * x - XQPoly(QPoly(1)));
  CHECK(to_string(XQPoly(QPoly{0, 1}) + x) == "(q) + (1)*x");
}

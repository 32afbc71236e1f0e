#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "qstirling/enumerate.hpp"
#include "qstirling/error.hpp"
#include "qstirling/formulas.hpp"
#include "qstirling/qcomb.hpp"

using namespace qstirling;

namespace {

QRational rising(QRational a, int m) {
  QRational out = 1;
  for (int t = 0; t < m; ++t) out *= a + t;
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("second kind closed forms") {
  CHECK(s2_closed(2, 1) == QPoly(1));
  CHECK(s2_closed_scaled(2, 1) == QPoly{1, -1});
  CHECK(s2_closed(4, 2) == QPoly{6, 1});
  CHECK(s2_closed_alt(4, 2) == QPoly{6, 1});
  CHECK(s2_closed_alt(1, 1) == QPoly(1));
  CHECK(s2_closed_alt(5, 3) == QPoly{20, 5});
  CHECK_THROWS_AS(s2_closed_alt(0, 0), Error);
  for (int n = 0; n <= 9; ++n) CHECK(s2_closed(n, n) == QPoly(1));
}

TEST_CASE("first kind closed forms") {
  CHECK(s1_closed(3, 1) == QPoly{1, 1});
  CHECK(s1_closed(4, 1) == QPoly{1, 2, 2, 1});
  CHECK(s1_closed_alt(3, 1) == QPoly{1, 1});
  CHECK(s1_closed_alt(5, 2) == QPoly{10, 18, 15, 7});
  for (int n = 0; n <= 9; ++n) {
    CHECK(s1_closed(n, n) == QPoly(1));
    CHECK(s1_closed_alt(n, n) == QPoly(1));
  }
}

TEST_CASE("closed forms match enumeration") {
  for (int n = 0; n <= 8; ++n) {
    const auto s1 = s1_enum_row(n);
    const auto s2 = s2_enum_row(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(s1_closed(n, k) == s1[static_cast<std::size_t>(k)]);
      CHECK(s1_closed_alt(n, k) == s1[static_cast<std::size_t>(k)]);
      CHECK(s2_closed(n, k) == s2[static_cast<std::size_t>(k)]);
      if (n > 0) CHECK(s2_closed_alt(n, k) == s2[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("identity row requirement") {
  CHECK(identity_rows_needed(5, 5) == 0);
  CHECK(identity_rows_needed(5, 2) == 6);
  CHECK(identity_rows_needed(4, 0) == 4);
  const auto small = source_triangle(StirlingKind::Second, 3, Source::Closed);
  CHECK_THROWS_AS(cross_kind_sum(4, 1, small), Error);
}

TEST_CASE("cross-kind identities") {
  CHECK(identity_first(3, 1) == QPoly{1, 1});
  CHECK(identity_first(4, 1) == QPoly{1, 2, 2, 1});
  CHECK(identity_second(3, 2) == QPoly(3));
  CHECK(identity_second(4, 2) == QPoly{6, 1});
  for (int n = 0; n <= 6; ++n) {
    CHECK(identity_first(n, n) == QPoly(1));
    CHECK(identity_second(n, n) == QPoly(1));
  }
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(identity_first(n, k, Source::Path) == s1_closed(n, k));
      CHECK(identity_second(n, k, Source::Path) == s2_closed(n, k));
    }
  // enumeration as the source, within its bounds
  CHECK(identity_first(5, 2, Source::Enum) == QPoly{10, 18, 15, 7});
  CHECK(identity_second(5, 3, Source::Enum) == QPoly{20, 5});
  CHECK(code_of([] { identity_first(9, 1, Source::Enum); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("narayana shadow") {
  CHECK(narayana_identity_rhs(4, 2) == 6);
  CHECK(narayana_identity_rhs(5, 3) == 20);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(narayana_identity_check(n, k));
}

TEST_CASE("coeff_D") {
  CHECK(coeff_D(3, 2, 0, 0) == -1);
  CHECK(coeff_D(2, 2, 0, 0) == 1);
  CHECK(coeff_D(4, 2, 1, 1) == 3);
  CHECK(code_of([] { coeff_D(3, 2, 0, 1); }) == ErrorCode::RangeViolation);
  CHECK(code_of([] { coeff_D(3, 2, 2, 0); }) == ErrorCode::RangeViolation);
}

TEST_CASE("coeff_Cbar and coeff_C") {
  CHECK(coeff_Cbar(3, 2, 1, 1) == -3);
  CHECK(coeff_Cbar(3, 2, 2, 1) == 0);
  CHECK(coeff_Cbar(3, 2, 1, 0) == -3);
  CHECK(code_of([] { coeff_Cbar(3, 2, 3, 1); }) == ErrorCode::RangeViolation);
  CHECK(coeff_C_check(4, 2, 1, 1));
  CHECK(coeff_C_check(5, 2, 2, 1));
  CHECK(code_of([] { coeff_C_check(3, 3, 0, 0); }) == ErrorCode::RangeViolation);
  CHECK(code_of([] { coeff_C_check(4, 2, 1, 0); }) == ErrorCode::RangeViolation);
}

TEST_CASE("coeff_E") {
  CHECK(coeff_E(3, 1, 0, 0) == 9);
  CHECK(coeff_E(2, 1, 0, 1) == 3);
  CHECK(coeff_E(2, 2, 1, 0) == 0);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(QRational(3), 0) == 1);
  CHECK(pochhammer(QRational(2), 3) == 24);
  CHECK(pochhammer(QRational(-2), 3) == 0);
  CHECK(pochhammer(QRational(1, 2), 2) == QRational(3, 4));
}

TEST_CASE("pfq_eval") {
  CHECK(pfq_eval({{QRational(0), QRational(1), QRational(2)}, {QRational(4), QRational(5)}}) == 1);
  CHECK(pfq_eval({{QRational(-1), QRational(1)}, {QRational(2)}}) == QRational(1, 2));
  CHECK(pfq_eval({{QRational(-1), QRational(1), QRational(2)}, {QRational(4), QRational(-1)}}) == QRational(3, 2));
  // Chu-Vandermonde: 2F1(-m, a; c; 1) = (c-a)_m / (c)_m
  for (int m = 0; m <= 6; ++m)
    for (int a = -3; a <= 5; ++a)
      for (int c = 1; c <= 6; ++c) {
        const QRational lhs = pfq_eval({{QRational(-m), QRational(a)}, {QRational(c)}});
        CHECK(lhs == rising(QRational(c - a), m) / rising(QRational(c), m));
      }
  CHECK(code_of([] { pfq_eval({{QRational(-3), QRational(1)}, {QRational(-1)}}); }) == ErrorCode::PoleInRange);
  CHECK(code_of([] { pfq_eval({{QRational(1), QRational(1)}, {QRational(2)}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { pfq_eval({{QRational(-1)}, {QRational(2)}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("summation lemmas") {
  const auto s = summation_lemma_sides(SaalschutzParams{1, 1, 2, 4});
  CHECK(s.lhs == QRational(3, 2));
  CHECK(s.rhs == QRational(3, 2));
  const auto g = summation_lemma_sides(GaussParams{2, 1, 3});
  CHECK(g.lhs == QRational(1, 2));
  CHECK(g.rhs == QRational(1, 2));
  CHECK(summation_lemma_check(ContiguityParams{2, 3, 5, 5, 2, 7, 4}));
  CHECK(summation_lemma_check(ContiguityParams{3, QRational(1, 2), 2, 5, 3, 7, 9}));
  CHECK(summation_lemma_check(SaalschutzParams{4, QRational(1, 3), 5, 2}));
  CHECK(code_of([] { summation_lemma_sides(GaussParams{2, 1, -1}); }) == ErrorCode::PoleInRange);
}

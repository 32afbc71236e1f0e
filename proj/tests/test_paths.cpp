#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qstirling/enumerate.hpp"
#include "qstirling/error.hpp"
#include "qstirling/paths.hpp"
#include "qstirling/qcomb.hpp"

using namespace qstirling;

namespace {

XQPoly one(int) { return XQPoly(QPoly(1)); }

XQPoly row_as_xpoly(const std::vector<QPoly>& row) { return XQPoly(row); }

}  // namespace

TEST_CASE("unit weights count the classical paths") {
  CHECK(path_gf(MotzkinWeights{one, one}, 3) == XQPoly(QPoly(4)));
  CHECK(path_gf(DyckWeights{one, one}, 3) == XQPoly(QPoly(5)));
  CHECK(path_gf(SchroderWeights{one, one}, 2) == XQPoly(QPoly(6)));
  const auto motzkin = path_gf_series(MotzkinWeights{one, one}, 6);
  const std::vector<long> expected{1, 1, 2, 4, 9, 21, 51};
  for (int n = 0; n <= 6; ++n) CHECK(motzkin[static_cast<std::size_t>(n)] == XQPoly(QPoly(expected[n])));
  for (int n = 0; n <= 8; ++n) CHECK(path_gf(DyckWeights{one, one}, n) == XQPoly(QPoly(catalan(n))));
}

TEST_CASE("path sums reproduce the enumerations") {
  const auto s2 = path_gf_series(s2_motzkin_weights(), 8);
  const auto s1 = path_gf_series(s1_dyck_weights(), 7);
  for (int n = 0; n <= 8; ++n) CHECK(s2[static_cast<std::size_t>(n)] == row_as_xpoly(s2_enum_row(n)));
  for (int n = 0; n <= 7; ++n) CHECK(s1[static_cast<std::size_t>(n)] == row_as_xpoly(s1_enum_row(n)));
}

TEST_CASE("continued fractions agree with the path sums") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(s2_via_jfraction(n) == path_gf(s2_motzkin_weights(), n));
    CHECK(s1_via_tfraction(n) == path_gf(s1_dyck_weights(), n));
    CHECK(s1_scaled_via_schroder(n) == path_gf(s1_scaled_schroder_weights(), n));
  }
}

TEST_CASE("scaled first kind via Schroeder paths") {
  const XQPoly x = XQPoly::x();
  CHECK(s1_scaled_via_schroder(1) == x);
  CHECK(s1_scaled_via_schroder(2) == XQPoly(QPoly{1, -1}) * x + x * x);
  for (int n = 0; n <= 7; ++n) {
    const auto row = s1_enum_row(n);
    std::vector<QPoly> scaled;
    for (int k = 0; k <= n; ++k)
      scaled.push_back(one_minus_q_power(static_cast<std::size_t>(n - k)) * row[static_cast<std::size_t>(k)]);
    CHECK(s1_scaled_via_schroder(n) == XQPoly(scaled));
  }
}

TEST_CASE("mu") {
  CHECK(mu_dp(2, 0) == QPoly{1, -1});
  CHECK(mu_dp(3, 1) == QPoly{2, -1, -1});
  CHECK(mu_dp(0, 0) == QPoly(1));
  CHECK(mu_dp(5, 5) == QPoly(1));
  CHECK(mu_closed(2, 0) == QPoly{1, -1});
  CHECK(mu_closed(3, 1) == QPoly{2, -1, -1});
  for (int n = 0; n <= 12; ++n)
    for (int k = n % 2; k <= n; k += 2) CHECK(mu_closed(n, k) == mu_dp(n, k));
  try {
    mu_dp(3, 0);
    FAIL("expected ParityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityViolation);
  }
  CHECK_THROWS_AS(mu_closed(4, 1), Error);
  CHECK_THROWS_AS(mu_dp(2, 4), Error);
}

TEST_CASE("expansion over mu") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(qstsum_lhs(n) == qstsum_rhs(n));
    CHECK(qstsum_check(n));
  }
}

TEST_CASE("fraction series") {
  // Catalan numbers from the S-fraction with a_i = 1, b_i = 0
  const auto cat = jfraction_series(one, [](int) { return XQPoly(); }, 6);
  const std::vector<long> even{1, 1, 2, 5};
  for (int t = 0; t <= 3; ++t) CHECK(cat[static_cast<std::size_t>(2 * t)] == XQPoly(QPoly(even[t])));
  CHECK(cat[1].is_zero());
  CHECK(cat[5].is_zero());
  const auto motzkin = jfraction_series(one, one, 6);
  CHECK(motzkin[6] == XQPoly(QPoly(51)));
  const auto schroder = schroder_fraction_series(one, one, 3);
  CHECK(schroder[3] == XQPoly(QPoly(22)));
}

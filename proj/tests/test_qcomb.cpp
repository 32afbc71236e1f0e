#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qstirling/error.hpp"
#include "qstirling/qcomb.hpp"

using namespace qstirling;

namespace {

// Pascal's triangle, independent of GMP's binomial.
BigInt pascal(long u, long v) {
  if (v < 0 || v > u) return 0;
  std::vector<BigInt> row{1};
  for (long m = 1; m <= u; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 1);
    for (long j = 1; j < m; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(v)];
}

// Counts set partitions of {1..n} into k blocks by a brute-force recursion
// on where element n goes.
long count_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return count_partitions(n - 1, k - 1) + k * count_partitions(n - 1, k);
}

}  // namespace

TEST_CASE("binom_ext conventions") {
  CHECK(binom_ext(5, 2) == 10);
  CHECK(binom_ext(-1, -1) == 1);
  CHECK(binom_ext(-2, -2) == 1);
  CHECK(binom_ext(-1, 0) == 0);
  CHECK(binom_ext(-3, -3) == 0);
  CHECK(binom_ext(3, -1) == 0);
  CHECK(binom_ext(2, 5) == 0);
  for (long u = 0; u <= 12; ++u)
    for (long v = 0; v <= 12; ++v) CHECK(binom_ext(u, v) == pascal(u, v));
}

TEST_CASE("binom_general is the falling-factorial binomial") {
  CHECK(binom_general(-1, 0) == 1);
  CHECK(binom_general(-1, 3) == -1);
  CHECK(binom_general(-2, 2) == 3);
  CHECK(binom_general(4, -1) == 0);
  for (long u = 0; u <= 10; ++u)
    for (long v = 0; v <= 10; ++v) CHECK(binom_general(u, v) == binom_ext(u, v));
}

TEST_CASE("qbinom") {
  CHECK(qbinom(3, 1) == QPoly{1, 1, 1});
  CHECK(qbinom(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(qbinom(2, 5).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(0, 0) == QPoly(1));
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(poly_eval_int(qbinom(n, k), 1) == pascal(n, k));
      CHECK(qbinom(n, k) == qbinom(n, n - k));
      if (n >= 1) {
        // second form of the recurrence
        CHECK(qbinom(n, k) == qbinom(n - 1, k - 1).shifted(static_cast<std::size_t>(n - k)) + qbinom(n - 1, k));
      }
    }
  }
}

TEST_CASE("narayana") {
  CHECK(narayana(0, 0) == 1);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(3, 0) == 0);
  CHECK(narayana(5, 3) == 20);
  CHECK(narayana(3, 4) == 0);
  for (long n = 0; n <= 12; ++n) {
    BigInt sum = 0;
    for (long k = 0; k <= n; ++k) sum += narayana(n, k);
    CHECK(sum == catalan(n));
  }
  CHECK(catalan(5) == 42);
}

TEST_CASE("stirling_classical") {
  CHECK(stirling_classical(StirlingKind::Second, 4, 2) == 7);
  CHECK(stirling_classical(StirlingKind::First, 3, 1) == 2);
  CHECK(stirling_classical(StirlingKind::First, 6, 6) == 1);
  CHECK(stirling_classical(StirlingKind::First, 4, 1) == 6);
  CHECK(stirling_classical(StirlingKind::Second, 0, 0) == 1);
  CHECK(stirling_classical(StirlingKind::Second, 5, 0) == 0);
  CHECK(stirling_classical(StirlingKind::First, 3, 5) == 0);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling_classical(StirlingKind::Second, n, k) == count_partitions(n, k));
  // row sums of the first kind are n!
  for (int n = 0; n <= 10; ++n) {
    BigInt sum = 0;
    BigInt fact = 1;
    for (int k = 0; k <= n; ++k) sum += stirling_classical(StirlingKind::First, n, k);
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(sum == fact);
  }
}

TEST_CASE("coefficient family A") {
  CHECK(coeff_A(2, 1, 0, 0) == 3);
  CHECK(coeff_A(5, 2, 1, 0) == 75);
  CHECK(coeff_A_factored(2, 1, 0, 0) == 3);
  CHECK(coeff_A_factored(5, 2, 1, 0) == 75);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(coeff_A(n, k, n - k + 1, 0) == 0);
}

TEST_CASE("coefficient family B") {
  CHECK(coeff_B(3, 2, 0, 0) == 1);
  CHECK(coeff_B(5, 2, 1, 0) == 2);
  CHECK(coeff_B_factored(3, 2, 0, 0) == 1);
  CHECK(coeff_B_factored(5, 2, 1, 0) == 2);
  // the guard term the first-kind formulas need to vanish
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n - k + 1; ++j) CHECK(coeff_B(n + 1, k + 1, n - k + 1, j) == 0);
  // needs C(-1,0) = 0 to agree with the factored form
  for (int n = 1; n <= 8; ++n) CHECK(coeff_B(n, 1, n - 1, 0) == coeff_B_factored(n, 1, n - 1, 0));
}

TEST_CASE("factored forms check divisibility") {
  try {
    coeff_B_factored(0, 0, 0, 0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("signed matrix inverse") {
  CHECK(signed_matrix_inverse_check(1));
  CHECK(signed_matrix_inverse_check(5));
  CHECK(signed_matrix_inverse_check(10));
  CHECK_THROWS_AS(signed_matrix_inverse_check(0), Error);
}

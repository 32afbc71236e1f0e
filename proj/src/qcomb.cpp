#include "qstirling/qcomb.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "qstirling/error.hpp"

namespace qstirling {

BigInt binom_ext(long u, long v) {
  if ((u == -1 && v == -1) || (u == -2 && v == -2)) return 1;
  if (v < 0 || u < v) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(v));
  return out;
}

BigInt binom_general(long u, long v) {
  if (v < 0) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), BigInt(u).get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

namespace {

// Pascal-style table of Gaussian binomials, grown on demand. Rows are only
// ever appended, under the lock.
class QBinomialTable {
 public:
  QPoly get(long n, long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) append_row();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void append_row() {
    const std::size_t n = rows_.size();
    std::vector<QPoly> row(n + 1);
    row[0] = QPoly(1);
    row[n] = QPoly(1);
    for (std::size_t k = 1; k < n; ++k) {
      row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].shifted(k);
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

QBinomialTable& qbinomial_table() {
  static QBinomialTable table;
  return table;
}

}  // namespace

QPoly qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return {};
  return qbinomial_table().get(n, k);
}

BigInt narayana(long n, long k) {
  if (n < 0 || k < 0) {
    throw Error(ErrorCode::InvalidArgument, "narayana requires n, k >= 0");
  }
  if (k == 0) return n == 0 ? 1 : 0;
  if (k > n) return 0;
  BigInt product = binom_ext(n, k - 1) * binom_ext(n, k);
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt catalan(long n) {
  BigInt out = binom_ext(2 * n, n);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return out;
}

BigInt stirling_classical(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0) {
    throw Error(ErrorCode::InvalidArgument, "stirling_classical requires n, k >= 0");
  }
  if (k > n) return 0;

  if (kind == StirlingKind::Second) {
    BigInt sum = 0;
    BigInt power;
    for (long j = 0; j <= k; ++j) {
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      BigInt term = binom_ext(k, j) * power;
      if ((k - j) % 2 == 0) sum += term;
      else sum -= term;
    }
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
    if (!mpz_divisible_p(sum.get_mpz_t(), factorial.get_mpz_t())) {
      throw Error(ErrorCode::NonzeroRemainder,
                  "Stirling sum not divisible by k! at n=" + std::to_string(n));
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), factorial.get_mpz_t());
    return out;
  }

  // c(m, j) for the current m, j = 0..m
  std::vector<BigInt> row{BigInt(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1);
    for (long j = 1; j <= m; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      next[ju] = row[ju - 1];
      if (j < m) next[ju] += BigInt(m - 1) * row[ju];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt coeff_A(long n, long k, long i, long j) {
  return binom_ext(n, k + i) * binom_ext(n, k - j) -
         binom_ext(n, k + i + 1) * binom_ext(n, k - j - 1);
}

BigInt coeff_B(long n, long k, long i, long j) {
  return binom_ext(n + j - 1, k - 1) * binom_ext(n - i - 1, k - 1) -
         binom_ext(n + j, k - 1) * binom_ext(n - i - 2, k - 1);
}

namespace {

BigInt divide_checked(const BigInt& numerator, long denominator, const char* what) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, what);
  BigInt d = denominator;
  if (!mpz_divisible_p(numerator.get_mpz_t(), d.get_mpz_t())) {
    throw Error(ErrorCode::NonzeroRemainder, what);
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), d.get_mpz_t());
  return out;
}

}  // namespace

BigInt coeff_A_factored(long n, long k, long i, long j) {
  BigInt numerator = BigInt(i + j + 1) * binom_ext(n + 1, k - j) * binom_ext(n + 1, k + i + 1);
  return divide_checked(numerator, n + 1, "factored A is not an integer");
}

BigInt coeff_B_factored(long n, long k, long i, long j) {
  BigInt numerator = BigInt(i + j + 1) * binom_ext(n + j, k - 1) * binom_ext(n - i - 2, k - 2);
  return divide_checked(numerator, n + j, "factored B is not an integer");
}

bool signed_matrix_inverse_check(long size) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  // Only one of the two factors may carry the sign (-1)^{i-j}: with both
  // signed the product is the signed Lah matrix, not the identity.
  auto entry = [](StirlingKind kind, long i, long j) -> BigInt {
    if (j > i) return 0;
    BigInt s = stirling_classical(kind, i, j);
    return kind == StirlingKind::Second || (i - j) % 2 == 0 ? s : BigInt(-s);
  };
  for (long r = 0; r < size; ++r) {
    for (long c = 0; c < size; ++c) {
      BigInt sum = 0;
      for (long t = 0; t < size; ++t) {
        sum += entry(StirlingKind::First, r, t) * entry(StirlingKind::Second, t, c);
      }
      if (sum != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace qstirling

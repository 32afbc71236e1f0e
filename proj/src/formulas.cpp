#include "qstirling/formulas.hpp"

#include <string>
#include <type_traits>

#include "qstirling/error.hpp"
#include "qstirling/paths.hpp"

namespace qstirling {

namespace {

void check_cell(int n, int k, const char* what) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": need 0 <= k <= n");
  }
}

std::size_t triangular(long j) { return static_cast<std::size_t>(j * (j + 1) / 2); }

// sign * coeff * q^shift * [i choose j]_q
void accumulate(QPoly& sum, bool negative, const BigInt& coeff, std::size_t shift, int i, int j) {
  if (coeff == 0) return;
  QPoly term = qbinom(i, j).shifted(shift).scaled(coeff);
  if (negative) sum -= term;
  else sum += term;
}

QPoly unscale(const QPoly& scaled, int n, int k) {
  return poly_divide_exact(scaled, one_minus_q_power(static_cast<std::size_t>(n - k)));
}

// C(n-1+j, n-k+j) C(2n-k, n-k-j), the weight shared by both identities and
// by every coefficient sum in their proofs.
BigInt identity_weight(long n, long k, long j) {
  return binom_general(n - 1 + j, n - k + j) * binom_general(2 * n - k, n - k - j);
}

}  // namespace

QPoly s2_closed_scaled(int n, int k) {
  check_cell(n, k, "s2_closed");
  QPoly sum;
  for (int j = 0; j <= k; ++j) {
    for (int i = j; i <= n - k; ++i) {
      accumulate(sum, i % 2 != 0, coeff_A(n, k, i, j), triangular(j), i, j);
    }
  }
  return sum;
}

QPoly s2_closed_alt_scaled(int n, int k) {
  check_cell(n, k, "s2_closed_alt");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "s2_closed_alt: requires n > 0");
  QPoly sum;
  for (int j = 0; j <= k - 1; ++j) {
    for (int i = j; i <= n - k; ++i) {
      accumulate(sum, i % 2 != 0, coeff_A(n - 1, k - 1, i, j),
                 static_cast<std::size_t>(i) + triangular(j - 1), i, j);
    }
  }
  return sum;
}

QPoly s1_closed_scaled(int n, int k) {
  check_cell(n, k, "s1_closed");
  QPoly sum;
  for (int j = 0; j <= n - k; ++j) {
    for (int i = j; i <= n - k; ++i) {
      accumulate(sum, j % 2 != 0, coeff_B(n, k, i, j), triangular(j), i, j);
    }
  }
  return sum;
}

QPoly s1_closed_alt_scaled(int n, int k) {
  check_cell(n, k, "s1_closed_alt");
  QPoly sum;
  for (int j = 0; j <= n - k; ++j) {
    for (int i = j; i <= n - k; ++i) {
      accumulate(sum, j % 2 != 0, coeff_B(n + 1, k + 1, i, j),
                 static_cast<std::size_t>(i) + triangular(j - 1), i, j);
    }
  }
  return sum;
}

QPoly s2_closed(int n, int k) { return unscale(s2_closed_scaled(n, k), n, k); }
QPoly s2_closed_alt(int n, int k) { return unscale(s2_closed_alt_scaled(n, k), n, k); }
QPoly s1_closed(int n, int k) { return unscale(s1_closed_scaled(n, k), n, k); }
QPoly s1_closed_alt(int n, int k) { return unscale(s1_closed_alt_scaled(n, k), n, k); }

Triangle source_triangle(StirlingKind kind, int nmax, Source source, const EnumBounds& bounds) {
  if (nmax < 0) throw Error(ErrorCode::InvalidArgument, "triangle size must be >= 0");
  Triangle t;
  t.kind = kind;
  t.nmax = nmax;
  const bool first = kind == StirlingKind::First;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<QPoly> row;
    switch (source) {
      case Source::Enum:
        row = first ? s1_enum_row(n, bounds) : s2_enum_row(n, bounds);
        break;
      case Source::Closed:
        for (int k = 0; k <= n; ++k) row.push_back(first ? s1_closed(n, k) : s2_closed(n, k));
        break;
      case Source::Path: {
        const XQPoly gf = first ? s1_via_tfraction(n) : s2_via_jfraction(n);
        for (int k = 0; k <= n; ++k) row.push_back(xqpoly_coeff(gf, static_cast<std::size_t>(k)));
        break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

int identity_rows_needed(int n, int k) {
  check_cell(n, k, "identity");
  // for k = 0 < n every weight vanishes: C(n-1+j, n+j) = 0
  return k == 0 ? n : 2 * (n - k);
}

QPoly cross_kind_sum(int n, int k, const Triangle& inner) {
  if (inner.nmax < identity_rows_needed(n, k)) {
    throw Error(ErrorCode::InvalidArgument, "identity: source triangle too small");
  }
  QPoly sum;
  for (int j = 0; j <= n - k; ++j) {
    const BigInt w = identity_weight(n, k, j);
    if (w == 0) continue;
    QPoly term = inner.at(n - k + j, j).scaled(w);
    if ((n - k + j) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

QPoly identity_first(int n, int k, Source s2_source, const EnumBounds& bounds) {
  check_cell(n, k, "identity_first");
  return cross_kind_sum(n, k, source_triangle(StirlingKind::Second, identity_rows_needed(n, k), s2_source, bounds));
}

QPoly identity_second(int n, int k, Source s1_source, const EnumBounds& bounds) {
  check_cell(n, k, "identity_second");
  return cross_kind_sum(n, k, source_triangle(StirlingKind::First, identity_rows_needed(n, k), s1_source, bounds));
}

BigInt narayana_identity_rhs(int n, int k) {
  check_cell(n, k, "narayana_identity");
  BigInt sum = 0;
  for (int j = 0; j <= n - k; ++j) {
    BigInt term = identity_weight(n, k, j) * narayana(n - k + j, j);
    if ((n - k + j) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

bool narayana_identity_check(int n, int k) { return narayana_identity_rhs(n, k) == narayana(n, k); }

namespace {

void check_hi(int n, int k, int h, int i, const char* what) {
  if (n < 0 || k < 0 || k > n || i < 0 || i > h || h > n - k) {
    throw Error(ErrorCode::RangeViolation, std::string(what) + ": need 0 <= i <= h <= n-k");
  }
}

}  // namespace

BigInt coeff_D(int n, int k, int h, int i) {
  check_hi(n, k, h, i, "coeff_D");
  BigInt sum = 0;
  for (int j = i; j <= n - k; ++j) {
    BigInt term = identity_weight(n, k, j) * coeff_A(n - k + j, j, h, i);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt coeff_Cbar(int n, int k, int h, int i) {
  if (n < 0 || k < 0 || k > n || h < 0 || h > n - k + 1 || i < 0) {
    throw Error(ErrorCode::RangeViolation, "coeff_Cbar: need 0 <= h <= n-k+1 and i >= 0");
  }
  BigInt sum = 0;
  for (int j = 0; j <= n - k; ++j) {
    BigInt term = identity_weight(n, k, j) * binom_ext(n - k + j + i - 1, j - 1) *
                  binom_ext(n - k + j - h - 1, j - 1);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt coeff_C(int n, int k, int h, int i) {
  check_hi(n, k, h, i, "coeff_C");
  BigInt sum = 0;
  for (int j = 0; j <= n - k; ++j) {
    BigInt term = identity_weight(n, k, j) * coeff_B(n - k + j, j, h, i);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

bool coeff_C_check(int n, int k, int h, int i) {
  if (i < 1) throw Error(ErrorCode::RangeViolation, "coeff_C_check: need i >= 1");
  check_hi(n, k, h, i, "coeff_C_check");
  const BigInt direct = coeff_C(n, k, h, i);
  const BigInt via_bar = coeff_Cbar(n, k, h, i) - coeff_Cbar(n, k, h + 1, i + 1);
  BigInt expected = coeff_A(n, k, h, i);
  if ((n + k + h + i) % 2 != 0) expected = -expected;
  return direct == via_bar && via_bar == expected;
}

BigInt coeff_E(int n, int k, int i, int u) {
  if (n < 0 || k < 0 || i < 0 || u < 0) {
    throw Error(ErrorCode::RangeViolation, "coeff_E: need n, k, i, u >= 0");
  }
  BigInt sum = 0;
  for (int j = k; j <= n - i - u; ++j) {
    BigInt term = binom_ext(2 * n - i - j, j) * binom_ext(j, k) * binom_ext(2 * n - 2 * j - i, n - j - i - u);
    if ((j - k) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

QRational pochhammer(const QRational& a, int m) {
  QRational out = 1;
  for (int t = 0; t < m; ++t) out *= a + t;
  return out;
}

namespace {

bool is_nonpositive_integer(const QRational& a) { return a.get_den() == 1 && a <= 0; }

}  // namespace

QRational pfq_eval(const HypSeries& s) {
  if (s.lower.empty() || s.upper.size() != s.lower.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "pfq_eval: need r+1 upper and r lower parameters, r >= 1");
  }
  long m = -1;
  for (const auto& a : s.upper) {
    if (!is_nonpositive_integer(a)) continue;
    const long cand = -a.get_num().get_si();
    if (m < 0 || cand < m) m = cand;
  }
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "pfq_eval: series does not terminate");
  for (const auto& b : s.lower) {
    if (is_nonpositive_integer(b) && -b.get_num().get_si() <= m - 1) {
      throw Error(ErrorCode::PoleInRange, "pfq_eval: lower parameter vanishes within the terminating range");
    }
  }

  QRational term = 1;
  QRational sum = 1;
  for (long t = 1; t <= m; ++t) {
    for (const auto& a : s.upper) term *= a + (t - 1);
    for (const auto& b : s.lower) term /= b + (t - 1);
    term /= t;
    sum += term;
  }
  return sum;
}

LemmaSides summation_lemma_sides(const LemmaParams& params) {
  return std::visit(
      [](const auto& p) -> LemmaSides {
        using T = std::decay_t<decltype(p)>;
        if (p.m < 0) throw Error(ErrorCode::InvalidArgument, "summation lemma: m must be >= 0");
        const QRational minus_m = -p.m;
        if constexpr (std::is_same_v<T, SaalschutzParams>) {
          const QRational denominator = pochhammer(p.gamma, p.m) * pochhammer(p.gamma - p.alpha - p.beta, p.m);
          if (denominator == 0) throw Error(ErrorCode::PoleInRange, "Saalschutz: right side has a pole");
          const QRational lhs = pfq_eval({{minus_m, p.alpha, p.beta},
                                          {p.gamma, p.alpha + p.beta - p.gamma - p.m + 1}});
          const QRational rhs =
              pochhammer(p.gamma - p.alpha, p.m) * pochhammer(p.gamma - p.beta, p.m) / denominator;
          return {lhs, rhs};
        } else if constexpr (std::is_same_v<T, GaussParams>) {
          const QRational denominator = pochhammer(p.gamma, p.m);
          if (denominator == 0) throw Error(ErrorCode::PoleInRange, "Gauss: right side has a pole");
          const QRational lhs = pfq_eval({{minus_m, p.alpha}, {p.gamma}});
          return {lhs, pochhammer(p.gamma - p.alpha, p.m) / denominator};
        } else {
          const std::vector<QRational> lower{p.beta1, p.beta2, p.beta3};
          const QRational lhs = (p.alpha3 - p.alpha4) * pfq_eval({{minus_m, p.alpha2, p.alpha3, p.alpha4}, lower});
          const QRational rhs = p.alpha3 * pfq_eval({{minus_m, p.alpha2, p.alpha3 + 1, p.alpha4}, lower}) -
                                p.alpha4 * pfq_eval({{minus_m, p.alpha2, p.alpha3, p.alpha4 + 1}, lower});
          return {lhs, rhs};
        }
      },
      params);
}

bool summation_lemma_check(const LemmaParams& params) {
  const auto sides = summation_lemma_sides(params);
  return sides.lhs == sides.rhs;
}

}  // namespace qstirling

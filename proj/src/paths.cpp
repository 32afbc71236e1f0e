#include "qstirling/paths.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <type_traits>

#include "qstirling/error.hpp"
#include "qstirling/qcomb.hpp"

namespace qstirling {

namespace {

std::vector<XQPoly> tabulate(const HeightWeight& w, int max_height) {
  std::vector<XQPoly> out;
  out.reserve(static_cast<std::size_t>(max_height) + 1);
  for (int h = 0; h <= max_height; ++h) out.push_back(w(h));
  return out;
}

void add_product(XQPoly& into, const XQPoly& a, const XQPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  into += a * b;
}

std::vector<XQPoly> motzkin_series(const MotzkinWeights& w, int max_n) {
  const auto down = tabulate(w.down, max_n);
  const auto level = tabulate(w.level, max_n);
  std::vector<XQPoly> series{XQPoly(QPoly(1))};
  std::vector<XQPoly> cur{XQPoly(QPoly(1))};
  for (int pos = 1; pos <= max_n; ++pos) {
    const int cap = std::min(pos, max_n - pos);
    std::vector<XQPoly> next(static_cast<std::size_t>(cap) + 1);
    for (std::size_t h = 0; h < cur.size(); ++h) {
      if (cur[h].is_zero()) continue;
      if (h <= static_cast<std::size_t>(cap)) add_product(next[h], cur[h], level[h]);
      if (h + 1 <= static_cast<std::size_t>(cap)) next[h + 1] += cur[h];
      if (h >= 1 && h - 1 <= static_cast<std::size_t>(cap)) add_product(next[h - 1], cur[h], down[h]);
    }
    cur = std::move(next);
    series.push_back(cur[0]);
  }
  return series;
}

std::vector<XQPoly> dyck_series(const DyckWeights& w, int max_n) {
  const auto peak = tabulate(w.peak, max_n);
  const auto fall = tabulate(w.fall, max_n);
  const int length = 2 * max_n;
  // [h][0]: last step was up, [h][1]: last step was down (or no step yet)
  using State = std::vector<std::array<XQPoly, 2>>;
  State cur(1);
  cur[0][1] = XQPoly(QPoly(1));
  std::vector<XQPoly> series{XQPoly(QPoly(1))};
  for (int pos = 1; pos <= length; ++pos) {
    const int cap = std::min(pos, length - pos);
    State next(static_cast<std::size_t>(cap) + 1);
    for (std::size_t h = 0; h < cur.size(); ++h) {
      for (int last = 0; last < 2; ++last) {
        const XQPoly& v = cur[h][static_cast<std::size_t>(last)];
        if (v.is_zero()) continue;
        if (h + 1 <= static_cast<std::size_t>(cap)) next[h + 1][0] += v;
        if (h >= 1 && h - 1 <= static_cast<std::size_t>(cap)) {
          add_product(next[h - 1][1], v, last == 0 ? peak[h] : fall[h]);
        }
      }
    }
    cur = std::move(next);
    if (pos % 2 == 0) series.push_back(cur[0][0] + cur[0][1]);
  }
  return series;
}

std::vector<XQPoly> schroder_series(const SchroderWeights& w, int max_n) {
  const auto down = tabulate(w.down, max_n);
  const auto level = tabulate(w.level, max_n);
  const int length = 2 * max_n;
  std::vector<std::vector<XQPoly>> table(static_cast<std::size_t>(length) + 1);
  for (int pos = 0; pos <= length; ++pos) {
    table[static_cast<std::size_t>(pos)].resize(static_cast<std::size_t>(std::min(pos, length - pos)) + 1);
  }
  table[0][0] = XQPoly(QPoly(1));
  for (int pos = 0; pos < length; ++pos) {
    const auto& cur = table[static_cast<std::size_t>(pos)];
    for (std::size_t h = 0; h < cur.size(); ++h) {
      if (cur[h].is_zero()) continue;
      auto& step1 = table[static_cast<std::size_t>(pos) + 1];
      if (h + 1 < step1.size()) step1[h + 1] += cur[h];
      if (h >= 1 && h - 1 < step1.size()) add_product(step1[h - 1], cur[h], down[h]);
      if (pos + 2 <= length) {
        auto& step2 = table[static_cast<std::size_t>(pos) + 2];
        if (h < step2.size()) add_product(step2[h], cur[h], level[h]);
      }
    }
  }
  std::vector<XQPoly> series;
  for (int n = 0; n <= max_n; ++n) series.push_back(table[2 * static_cast<std::size_t>(n)][0]);
  return series;
}

void check_size(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be >= 0");
}

void check_mu_params(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "mu: need 0 <= k <= n");
  if ((n - k) % 2 != 0) throw Error(ErrorCode::ParityViolation, "mu: n and k must have the same parity");
}

XQPoly constant(const QPoly& p) { return XQPoly(p); }

}  // namespace

std::vector<XQPoly> path_gf_series(const WeightSpec& spec, int max_n) {
  check_size(max_n, "path_gf");
  return std::visit(
      [max_n](const auto& w) -> std::vector<XQPoly> {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, MotzkinWeights>) return motzkin_series(w, max_n);
        else if constexpr (std::is_same_v<T, DyckWeights>) return dyck_series(w, max_n);
        else return schroder_series(w, max_n);
      },
      spec);
}

XQPoly path_gf(const WeightSpec& spec, int n) { return path_gf_series(spec, n).back(); }

MotzkinWeights s2_motzkin_weights() {
  return {
      [](int h) { return XQPoly::monomial(QPoly::q_integer(h), 1); },
      [](int h) { return XQPoly::x() + constant(QPoly::q_integer(h)); },
  };
}

DyckWeights s1_dyck_weights() {
  return {
      [](int) { return XQPoly::x(); },
      [](int h) { return constant(QPoly::q_integer(h)); },
  };
}

SchroderWeights s1_scaled_schroder_weights() {
  return {
      [](int h) { return constant(QPoly(1) - QPoly::q_power(static_cast<std::size_t>(h))); },
      [](int h) {
        return XQPoly::x() + constant(QPoly::q_power(static_cast<std::size_t>(h) + 1) - QPoly(1));
      },
  };
}

XQPoly s2_via_jfraction(int n) { return path_gf(s2_motzkin_weights(), n); }

XQPoly s1_via_tfraction(int n) { return path_gf(s1_dyck_weights(), n); }

XQPoly s1_scaled_via_schroder(int n) { return path_gf(s1_scaled_schroder_weights(), n); }

namespace {

// Level steps are marked by x so that the x^k coefficient separates the
// paths with exactly k level steps.
MotzkinWeights mu_marked_weights() {
  return {
      [](int h) { return constant(QPoly(1) - QPoly::q_power(static_cast<std::size_t>(h))); },
      [](int h) { return XQPoly::monomial(QPoly::q_power(static_cast<std::size_t>(h)), 1); },
  };
}

}  // namespace

QPoly mu_dp(int n, int k) {
  check_mu_params(n, k);
  return xqpoly_coeff(path_gf(mu_marked_weights(), n), static_cast<std::size_t>(k));
}

QPoly mu_closed(int n, int k) {
  check_mu_params(n, k);
  const int half = (n - k) / 2;
  QPoly sum;
  for (int u = 0; u <= half; ++u) {
    BigInt ballot = binom_ext(n, half - u) - binom_ext(n, half - u - 1);
    if (ballot == 0) continue;
    QPoly term = qbinom(k + u, u).shifted(static_cast<std::size_t>(u * (u + 1) / 2)).scaled(ballot);
    if (u % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

XQPoly qstsum_lhs(int n) {
  check_size(n, "qstsum");
  const XQPoly s1 = s1_via_tfraction(n);
  std::vector<QPoly> coeffs;
  for (int k = 0; k <= n; ++k) {
    coeffs.push_back(xqpoly_coeff(s1, static_cast<std::size_t>(k)) *
                     one_minus_q_power(static_cast<std::size_t>(n - k)));
  }
  return XQPoly(std::move(coeffs));
}

XQPoly qstsum_rhs(int n) {
  check_size(n, "qstsum");
  // mu rows by length, computed once
  const auto mu_rows = path_gf_series(mu_marked_weights(), 2 * n);
  const XQPoly x_minus_one = XQPoly::x() - XQPoly(QPoly(1));
  XQPoly sum;
  XQPoly power(QPoly(1));  // (x-1)^j
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n - j; ++i) {
      const int length = 2 * n - 2 * j - i;
      const QPoly mu = xqpoly_coeff(mu_rows[static_cast<std::size_t>(length)], static_cast<std::size_t>(i));
      if (mu.is_zero()) continue;
      const QPoly scalar = mu.shifted(static_cast<std::size_t>(i)).scaled(binom_ext(2 * n - i - j, j));
      sum += power * XQPoly(scalar);
    }
    power *= x_minus_one;
  }
  return sum;
}

bool qstsum_check(int n) { return qstsum_lhs(n) == qstsum_rhs(n); }

namespace {

ZSeries series_mul(const ZSeries& a, const ZSeries& b, int order) {
  ZSeries out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      add_product(out[i + j], a[i], b[j]);
    }
  }
  return out;
}

// 1/(1 - g) for a series g without constant term.
ZSeries one_over_one_minus(const ZSeries& g, int order) {
  ZSeries out(static_cast<std::size_t>(order) + 1);
  out[0] = XQPoly(QPoly(1));
  for (std::size_t m = 1; m <= static_cast<std::size_t>(order); ++m) {
    for (std::size_t t = 1; t <= m && t < g.size(); ++t) add_product(out[m], g[t], out[m - t]);
  }
  return out;
}

// Evaluates F_h = 1/(1 - linear(h) z - numerator(h+1) z^shift F_{h+1})
// from h = order down to 0, starting from F_{order+1} = 1.
ZSeries fraction_series(const std::function<XQPoly(int)>& linear,
                        const std::function<XQPoly(int)>& numerator, int shift, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be >= 0");
  ZSeries tail(1, XQPoly(QPoly(1)));
  for (int h = order; h >= 0; --h) {
    ZSeries g(static_cast<std::size_t>(order) + 1);
    if (order >= 1) g[1] += linear(h);
    const XQPoly num = numerator(h + 1);
    ZSeries shifted_tail(static_cast<std::size_t>(order) + 1);
    for (std::size_t t = 0; t < tail.size() && t + static_cast<std::size_t>(shift) <= static_cast<std::size_t>(order); ++t) {
      shifted_tail[t + static_cast<std::size_t>(shift)] = tail[t];
    }
    const ZSeries contribution = series_mul(ZSeries{num}, shifted_tail, order);
    for (std::size_t t = 0; t < contribution.size(); ++t) g[t] += contribution[t];
    tail = one_over_one_minus(g, order);
  }
  return tail;
}

}  // namespace

ZSeries jfraction_series(const HeightWeight& a, const HeightWeight& b, int order) {
  return fraction_series(b, a, 2, order);
}

ZSeries tfraction_series(const HeightWeight& b, const HeightWeight& c, int order) {
  return fraction_series([&](int h) { return b(h + 1) - c(h + 1); }, c, 1, order);
}

ZSeries schroder_fraction_series(const HeightWeight& c, const HeightWeight& d, int order) {
  return fraction_series(d, c, 1, order);
}

}  // namespace qstirling

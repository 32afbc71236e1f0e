#include "qstirling/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "qstirling/enumerate.hpp"
#include "qstirling/error.hpp"
#include "qstirling/formulas.hpp"
#include "qstirling/paths.hpp"
#include "qstirling/qcomb.hpp"

namespace qstirling {

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

Suite parse_suite(std::string_view name) {
  if (name == "identities") return Suite::Identities;
  if (name == "formulas") return Suite::Formulas;
  if (name == "paths") return Suite::Paths;
  if (name == "bijections") return Suite::Bijections;
  if (name == "hypergeometric") return Suite::Hypergeometric;
  if (name == "proof-steps") return Suite::ProofSteps;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Identities: return "identities";
    case Suite::Formulas: return "formulas";
    case Suite::Paths: return "paths";
    case Suite::Bijections: return "bijections";
    case Suite::Hypergeometric: return "hypergeometric";
    case Suite::ProofSteps: return "proof-steps";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

struct Param {
  const char* name;
  std::string value;
  Param(const char* n, long v) : name(n), value(std::to_string(v)) {}
  Param(const char* n, const QRational& v) : name(n), value(v.get_str()) {}
};

std::string params(std::initializer_list<Param> list) {
  std::string out;
  for (const auto& p : list) {
    if (!out.empty()) out += ',';
    out += p.name;
    out += '=';
    out += p.value;
  }
  return out;
}

std::string str(const QPoly& p) { return to_string(p); }
std::string str(const XQPoly& p) { return to_string(p); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const QRational& v) { return v.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(long v) { return std::to_string(v); }
const std::string& str(const std::string& s) { return s; }

// Runs one check; a thrown library error is a failed check, not a crash.
template <class F>
void check(VerifyReport& r, std::string id, std::string p, F&& compute) {
  CheckResult c;
  c.id = std::move(id);
  c.params = std::move(p);
  try {
    auto [expected, actual] = compute();
    c.expected = str(expected);
    c.actual = str(actual);
    c.pass = expected == actual;
  } catch (const std::exception& e) {
    c.expected = c.expected.empty() ? "no error" : c.expected;
    c.actual = std::string("error: ") + e.what();
    c.pass = false;
  }
  r.checks.push_back(std::move(c));
}

BigInt sign(long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

EnumBounds bounds_for(int n) { return {std::max(n, 12), std::max(n, 10)}; }

}  // namespace

void check_identity_theorems(VerifyReport& r, int closed_n, int enum_n, int s1_rows, int s2_rows) {
  if (closed_n >= 0) {
    const int rows = std::max(closed_n, 2 * closed_n - 2);
    const Triangle s1 = source_triangle(StirlingKind::First, rows, Source::Closed);
    const Triangle s2 = source_triangle(StirlingKind::Second, rows, Source::Closed);
    const Triangle s1_path = source_triangle(StirlingKind::First, rows, Source::Path);
    const Triangle s2_path = source_triangle(StirlingKind::Second, rows, Source::Path);
    for (int n = 0; n <= closed_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto p = params({{"n", n}, {"k", k}});
        check(r, "identity_first/closed", p, [&] { return std::pair{s1.at(n, k), cross_kind_sum(n, k, s2)}; });
        check(r, "identity_second/closed", p, [&] { return std::pair{s2.at(n, k), cross_kind_sum(n, k, s1)}; });
        check(r, "identity_first/path", p, [&] { return std::pair{s1.at(n, k), cross_kind_sum(n, k, s2_path)}; });
        check(r, "identity_second/path", p, [&] { return std::pair{s2.at(n, k), cross_kind_sum(n, k, s1_path)}; });
      }
    }
  }
  if (enum_n >= 0) {
    const EnumBounds bounds = bounds_for(std::max({enum_n, s1_rows, s2_rows}));
    const Triangle s1 = source_triangle(StirlingKind::First, std::max(enum_n, s1_rows), Source::Enum, bounds);
    const Triangle s2 = source_triangle(StirlingKind::Second, std::max(enum_n, s2_rows), Source::Enum, bounds);
    for (int n = 0; n <= enum_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto p = params({{"n", n}, {"k", k}});
        const int needed = identity_rows_needed(n, k);
        if (needed <= s2_rows) {
          check(r, "identity_first/enum", p, [&] { return std::pair{s1.at(n, k), cross_kind_sum(n, k, s2)}; });
        }
        if (needed <= s1_rows) {
          check(r, "identity_second/enum", p, [&] { return std::pair{s2.at(n, k), cross_kind_sum(n, k, s1)}; });
        }
      }
    }
  }
}

void check_narayana_identity(VerifyReport& r, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      check(r, "narayana_identity", params({{"n", n}, {"k", k}}),
            [&] { return std::pair{narayana(n, k), narayana_identity_rhs(n, k)}; });
    }
  }
}

void check_method_agreement(VerifyReport& r, int closed_n, int enum_s1_n, int enum_s2_n, int schroder_n) {
  const int top = std::max({closed_n, enum_s1_n, enum_s2_n, schroder_n, 0});
  const auto s1_series = path_gf_series(s1_dyck_weights(), top);
  const auto s2_series = path_gf_series(s2_motzkin_weights(), top);
  auto s1_path = [&](int n, int k) { return xqpoly_coeff(s1_series[static_cast<std::size_t>(n)], static_cast<std::size_t>(k)); };
  auto s2_path = [&](int n, int k) { return xqpoly_coeff(s2_series[static_cast<std::size_t>(n)], static_cast<std::size_t>(k)); };

  for (int n = 0; n <= closed_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto p = params({{"n", n}, {"k", k}});
      const QPoly s1 = s1_closed(n, k);
      const QPoly s2 = s2_closed(n, k);
      check(r, "s1_closed=s1_closed_alt", p, [&] { return std::pair{s1, s1_closed_alt(n, k)}; });
      check(r, "s1_closed=s1_path", p, [&] { return std::pair{s1, s1_path(n, k)}; });
      if (n > 0) check(r, "s2_closed=s2_closed_alt", p, [&] { return std::pair{s2, s2_closed_alt(n, k)}; });
      check(r, "s2_closed=s2_path", p, [&] { return std::pair{s2, s2_path(n, k)}; });
    }
  }
  const EnumBounds bounds = bounds_for(std::max(enum_s1_n, enum_s2_n));
  for (int n = 0; n <= enum_s1_n; ++n) {
    const auto row = s1_enum_row(n, bounds);
    for (int k = 0; k <= n; ++k) {
      const auto p = params({{"n", n}, {"k", k}});
      const QPoly& e = row[static_cast<std::size_t>(k)];
      check(r, "s1_enum=s1_closed", p, [&] { return std::pair{e, s1_closed(n, k)}; });
      check(r, "s1_enum=s1_closed_alt", p, [&] { return std::pair{e, s1_closed_alt(n, k)}; });
      check(r, "s1_enum=s1_path", p, [&] { return std::pair{e, s1_path(n, k)}; });
    }
  }
  for (int n = 0; n <= enum_s2_n; ++n) {
    const auto row = s2_enum_row(n, bounds);
    for (int k = 0; k <= n; ++k) {
      const auto p = params({{"n", n}, {"k", k}});
      const QPoly& e = row[static_cast<std::size_t>(k)];
      check(r, "s2_enum=s2_closed", p, [&] { return std::pair{e, s2_closed(n, k)}; });
      if (n > 0) check(r, "s2_enum=s2_closed_alt", p, [&] { return std::pair{e, s2_closed_alt(n, k)}; });
      check(r, "s2_enum=s2_path", p, [&] { return std::pair{e, s2_path(n, k)}; });
    }
  }
  for (int n = 0; n <= schroder_n; ++n) {
    check(r, "s1_scaled=schroder", params({{"n", n}}), [&] {
      std::vector<QPoly> scaled;
      for (int k = 0; k <= n; ++k) {
        scaled.push_back(s1_path(n, k) * one_minus_q_power(static_cast<std::size_t>(n - k)));
      }
      return std::pair{XQPoly(std::move(scaled)), s1_scaled_via_schroder(n)};
    });
  }
}

void check_specializations(VerifyReport& r, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto p = params({{"n", n}, {"k", k}});
      const QPoly s1 = s1_closed(n, k);
      const QPoly s2 = s2_closed(n, k);
      check(r, "s1_at_q1=classical", p,
            [&] { return std::pair{stirling_classical(StirlingKind::First, n, k), poly_eval_int(s1, 1)}; });
      check(r, "s2_at_q1=classical", p,
            [&] { return std::pair{stirling_classical(StirlingKind::Second, n, k), poly_eval_int(s2, 1)}; });
      check(r, "s1_at_q0=narayana", p, [&] { return std::pair{narayana(n, k), poly_eval_int(s1, 0)}; });
      check(r, "s2_at_q0=narayana", p, [&] { return std::pair{narayana(n, k), poly_eval_int(s2, 0)}; });
    }
  }
}

void check_bijections(VerifyReport& r, int partitions_n, int phi_n, int roundtrip_n) {
  check(r, "sample_partition_crossings", "156|24|38|79A", [] {
    const auto p = SetPartition::parse("156|24|38|79A");
    return std::pair{str(3L), str(static_cast<long>(rook_inversions(partition_to_rooks(p))))};
  });
  check(r, "sample_permutation_stats", "869237514", [] {
    const auto s = perm_stats(Permutation::parse("869237514"));
    return std::pair{std::string("invprime=5,rlm=4"),
                     "invprime=" + std::to_string(s.invprime) + ",rlm=" + std::to_string(s.rlm)};
  });

  const EnumBounds bounds = bounds_for(partitions_n);
  for (int n = 1; n <= partitions_n; ++n) {
    long partitions = 0;
    long agree = 0;
    std::set<std::vector<Cell>> image;
    for_each_set_partition(n, [&](const SetPartition& p) {
      ++partitions;
      const RookPlacement rooks = partition_to_rooks(p);
      if (rook_inversions(rooks) == crossings(p)) ++agree;
      image.insert(rooks.rooks());
    });
    const auto p = params({{"n", n}});
    check(r, "cro=inv", p, [&] { return std::pair{partitions, agree}; });
    check(r, "partition_to_rooks_injective", p, [&] { return std::pair{partitions, static_cast<long>(image.size())}; });
    check(r, "partition_to_rooks_onto", p, [&] {
      long placements = 0;
      long hit = 0;
      for (int rooks = 0; rooks <= n - 1; ++rooks) {
        for_each_rook_placement(n - 1, rooks, [&](const RookPlacement& rp) {
          ++placements;
          if (image.count(rp.rooks()) != 0) ++hit;
        });
      }
      return std::pair{placements, hit};
    });
    check(r, "s2_enum=s2_rooks", p, [&] { return std::pair{XQPoly(s2_enum_row(n, bounds)), XQPoly(s2_enum_rooks_row(n, bounds))}; });
  }

  for (int n = 0; n <= phi_n; ++n) {
    long perms = 0;
    long preserved = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++perms;
      const PermStats s = perm_stats(sigma);
      const XQPoly expected = XQPoly::monomial(QPoly::q_power(static_cast<std::size_t>(s.invprime)),
                                               static_cast<std::size_t>(s.rlm));
      if (phi(sigma).weight() == expected) ++preserved;
    });
    const auto p = params({{"n", n}});
    check(r, "phi_weight", p, [&] { return std::pair{perms, preserved}; });
    check(r, "s1_row_sum=factorial", p, [&] {
      BigInt total = 0;
      for (const auto& c : s1_enum_row(n, bounds_for(n))) total += poly_eval_int(c, 1);
      BigInt fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      return std::pair{fact, total};
    });
  }

  for (int n = 0; n <= roundtrip_n; ++n) {
    const auto p = params({{"n", n}});
    check(r, "phi_inverse_after_phi", p, [&] {
      long perms = 0;
      long ok = 0;
      for_each_permutation(n, [&](const Permutation& sigma) {
        ++perms;
        if (phi_inverse(phi(sigma)) == sigma) ++ok;
      });
      return std::pair{perms, ok};
    });
    check(r, "phi_after_phi_inverse", p, [&] {
      long paths = 0;
      long ok = 0;
      for_each_weighted_dyck_path(n, [&](const WeightedDyckPath& w) {
        ++paths;
        if (phi(phi_inverse(w)) == w) ++ok;
      });
      return std::pair{paths, ok};
    });
  }
}

void check_coefficient_families(VerifyReport& r, int diff_n, int rel_n) {
  for (int n = 0; n <= diff_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n - k; ++i) {
        for (int j = 0; j <= i; ++j) {
          const auto p = params({{"n", n}, {"k", k}, {"i", i}, {"j", j}});
          check(r, "A_diff=fact", p, [&] { return std::pair{coeff_A_factored(n, k, i, j), coeff_A(n, k, i, j)}; });
          // the factored form of B divides by n + j, which vanishes only at n = 0
          if (n + j != 0) {
            check(r, "B_diff=fact", p, [&] { return std::pair{coeff_B_factored(n, k, i, j), coeff_B(n, k, i, j)}; });
          }
        }
      }
    }
  }
  for (int n = 0; n <= rel_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n - k; ++i) {
        for (int j = 0; j <= i; ++j) {
          const auto p = params({{"n", n}, {"k", k}, {"i", i}, {"j", j}});
          check(r, "A_shift", p, [&] { return std::pair{coeff_A(n, k, i, j), coeff_A(n, k - 1, i + 1, j - 1)}; });
          check(r, "B_shift", p, [&] { return std::pair{coeff_B(n, k, i, j), coeff_B(n + 1, k, i + 1, j - 1)}; });
          check(r, "rel4B", p, [&] {
            const BigInt lhs = -coeff_B(n + 1, k + 1, i, j - 1) + coeff_B(n + 1, k + 1, i, j) +
                               coeff_B(n + 1, k + 1, i + 1, j - 1) - coeff_B(n + 1, k + 1, i + 1, j);
            return std::pair{coeff_B(n, k, i, j), lhs};
          });
          if (n >= 1 && k >= 1) {
            check(r, "rel4A", p, [&] {
              const BigInt lhs = coeff_A(n - 1, k - 1, i, j - 1) + coeff_A(n - 1, k - 1, i, j) +
                                 coeff_A(n - 1, k - 1, i + 1, j - 1) + coeff_A(n - 1, k - 1, i + 1, j);
              return std::pair{coeff_A(n, k, i, j), lhs};
            });
          }
        }
      }
    }
  }
  for (int n = 0; n <= rel_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto p = params({{"n", n}, {"k", k}});
      check(r, "qbinom_at_q1", p, [&] { return std::pair{binom_ext(n, k), poly_eval_int(qbinom(n, k), 1)}; });
      if (n >= 1) {
        check(r, "qbinom_recurrences", p, [&] {
          const QPoly other = qbinom(n - 1, k - 1).shifted(static_cast<std::size_t>(n - k)) + qbinom(n - 1, k);
          return std::pair{qbinom(n, k), other};
        });
      }
    }
    check(r, "narayana_row_sum=catalan", params({{"n", n}}), [&] {
      BigInt total = 0;
      for (int k = 0; k <= n; ++k) total += narayana(n, k);
      return std::pair{catalan(n), total};
    });
    if (n >= 1) {
      check(r, "signed_matrix_inverse", params({{"N", n}}), [&] { return std::pair{true, signed_matrix_inverse_check(n)}; });
    }
  }
}

void check_proof_steps(VerifyReport& r, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int d = n - k;
      for (int h = 0; h <= d; ++h) {
        for (int i = 0; i <= h; ++i) {
          const auto p = params({{"n", n}, {"k", k}, {"h", h}, {"i", i}});
          check(r, "D=signed_B", p,
                [&] { return std::pair{BigInt(sign(n + k + h + i) * coeff_B(n, k, h, i)), coeff_D(n, k, h, i)}; });
          if (i >= 1) check(r, "C=signed_A", p, [&] { return std::pair{true, coeff_C_check(n, k, h, i)}; });
          if (i < h) {
            check(r, "D_ratio", p, [&] {
              const BigInt lhs = BigInt(n + i) * (i + h + 2) * coeff_D(n, k, h, i);
              const BigInt rhs = -BigInt(h + i + 1) * (d + i + 2) * coeff_D(n, k, h, i + 1);
              return std::pair{lhs, rhs};
            });
            check(r, "B_ratio", p, [&] {
              const BigInt lhs = BigInt(n + i) * (i + h + 2) * coeff_B(n, k, h, i);
              const BigInt rhs = BigInt(h + i + 1) * (d + i + 2) * coeff_B(n, k, h, i + 1);
              return std::pair{lhs, rhs};
            });
          }
        }
        for (int i = 1; i <= h; ++i) {
          check(r, "Cbar=binomials", params({{"n", n}, {"k", k}, {"h", h}, {"i", i}}), [&] {
            const BigInt closed = sign(n + k + h + i) * binom_ext(n, k + h) * binom_ext(n, k - i);
            return std::pair{closed, coeff_Cbar(n, k, h, i)};
          });
        }
      }
      for (int i = 0; i <= d + 2; ++i) {
        check(r, "Cbar_vanishes", params({{"n", n}, {"k", k}, {"h", d + 1}, {"i", i}}),
              [&] { return std::pair{BigInt(0), coeff_Cbar(n, k, d + 1, i)}; });
      }
    }
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; k + i <= n; ++i) {
        for (int u = 0; k + i + u <= n; ++u) {
          check(r, "E_closed", params({{"n", n}, {"k", k}, {"i", i}, {"u", u}}), [&] {
            return std::pair{BigInt(binom_ext(n + u, k) * binom_ext(n - i - u, k)), coeff_E(n, k, i, u)};
          });
        }
      }
    }
  }
}

namespace {

bool vanishes_within(const QRational& b, int m) {
  // (b)_m = 0 iff b is one of 0, -1, ..., -(m-1)
  return b.get_den() == 1 && b <= 0 && b > -m;
}

std::vector<QRational> values(std::initializer_list<long> ints, std::initializer_list<std::pair<long, long>> fracs) {
  std::vector<QRational> out;
  for (long v : ints) out.emplace_back(v);
  for (const auto& [a, b] : fracs) {
    QRational q(a, b);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

void check_hypergeometric(VerifyReport& r) {
  for (int m = 0; m <= 6; ++m) {
    for (const auto& alpha : values({-6, -3, -1, 0, 2, 5, 9}, {{1, 2}})) {
      for (const auto& beta : values({-5, -2, 1, 3, 7}, {{7, 3}})) {
        for (const auto& gamma : values({-4, -1, 1, 2, 4, 6, 9}, {{-5, 2}})) {
          const QRational balance = alpha + beta - gamma - m + 1;
          if (vanishes_within(gamma, m) || vanishes_within(balance, m) || vanishes_within(gamma - alpha - beta, m)) {
            continue;
          }
          const SaalschutzParams sp{m, alpha, beta, gamma};
          check(r, "saalschutz", params({{"m", m}, {"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}), [&] {
            const auto sides = summation_lemma_sides(sp);
            return std::pair{sides.rhs, sides.lhs};
          });
        }
      }
    }
  }
  for (int m = 0; m <= 6; ++m) {
    for (long a = -6; a <= 9; ++a) {
      for (const auto& gamma : values({-6, -3, -1, 1, 2, 3, 5, 9}, {{5, 2}, {-7, 2}})) {
        if (vanishes_within(gamma, m)) continue;
        const GaussParams gp{m, QRational(a), gamma};
        check(r, "gauss", params({{"m", m}, {"alpha", a}, {"gamma", gamma}}), [&] {
          const auto sides = summation_lemma_sides(gp);
          return std::pair{sides.rhs, sides.lhs};
        });
      }
    }
  }
  for (int m = 0; m <= 6; ++m) {
    for (const auto& a2 : values({-3, 2}, {{1, 2}})) {
      for (const auto& a3 : values({-2, 1, 4}, {})) {
        for (const auto& a4 : values({-1, 3}, {{7, 2}})) {
          for (const auto& b1 : values({2, -4}, {})) {
            for (const auto& b3 : values({3}, {{-1, 3}})) {
              const QRational b2(5, 2);
              if (vanishes_within(b1, m) || vanishes_within(b3, m)) continue;
              const ContiguityParams cp{m, a2, a3, a4, b1, b2, b3};
              check(r, "contiguity",
                    params({{"m", m}, {"alpha2", a2}, {"alpha3", a3}, {"alpha4", a4}, {"beta1", b1}, {"beta2", b2}, {"beta3", b3}}),
                    [&] {
                      const auto sides = summation_lemma_sides(cp);
                      return std::pair{sides.rhs, sides.lhs};
                    });
            }
          }
        }
      }
    }
  }
}

void check_mu_and_fractions(VerifyReport& r, int mu_n, int qstsum_n, int fraction_order, int phi_image_n) {
  for (int n = 0; n <= mu_n; ++n) {
    for (int k = n % 2; k <= n; k += 2) {
      check(r, "mu_dp=mu_closed", params({{"n", n}, {"k", k}}), [&] { return std::pair{mu_closed(n, k), mu_dp(n, k)}; });
    }
  }
  for (int n = 0; n <= qstsum_n; ++n) {
    check(r, "qstsum", params({{"n", n}}), [&] { return std::pair{qstsum_rhs(n), qstsum_lhs(n)}; });
  }
  if (fraction_order >= 0) {
    const auto s2_weights = s2_motzkin_weights();
    const auto s1_weights = s1_dyck_weights();
    const auto schroder = s1_scaled_schroder_weights();
    const ZSeries j = jfraction_series(s2_weights.down, s2_weights.level, fraction_order);
    const ZSeries t = tfraction_series(s1_weights.peak, s1_weights.fall, fraction_order);
    const ZSeries s = schroder_fraction_series(schroder.down, schroder.level, fraction_order);
    const auto j_dp = path_gf_series(s2_weights, fraction_order);
    const auto t_dp = path_gf_series(s1_weights, fraction_order);
    const auto s_dp = path_gf_series(schroder, fraction_order);
    for (int n = 0; n <= fraction_order; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const auto p = params({{"n", n}});
      check(r, "jfraction=motzkin_dp", p, [&] { return std::pair{j_dp[i], j[i]}; });
      check(r, "tfraction=dyck_dp", p, [&] { return std::pair{t_dp[i], t[i]}; });
      check(r, "schroder_fraction=schroder_dp", p, [&] { return std::pair{s_dp[i], s[i]}; });
    }
  }
  for (int n = 0; n <= phi_image_n; ++n) {
    const auto p = params({{"n", n}});
    check(r, "phi_image_weight_sum=dyck_dp", p, [&] {
      XQPoly total;
      for_each_permutation(n, [&](const Permutation& sigma) { total += phi(sigma).weight(); });
      return std::pair{s1_via_tfraction(n), total};
    });
    check(r, "phi_image=weighted_paths", p, [&] {
      std::set<std::string> image;
      for_each_permutation(n, [&](const Permutation& sigma) { image.insert(to_string(phi(sigma))); });
      std::set<std::string> all;
      for_each_weighted_dyck_path(n, [&](const WeightedDyckPath& w) { all.insert(to_string(w)); });
      return std::pair{all.size() == image.size() && all == image, true};
    });
  }
}

VerifyReport run_suite(Suite suite, int nmax) {
  if (nmax < 0) throw Error(ErrorCode::InvalidArgument, "nmax must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = to_string(suite);
  r.nmax = nmax;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Identities) {
    check_identity_theorems(r, nmax, std::min(nmax, 8), std::min(nmax, 8), std::min(nmax, 10));
    check_narayana_identity(r, nmax);
  }
  if (all || suite == Suite::Formulas) {
    check_method_agreement(r, nmax, std::min(nmax, 8), std::min(nmax, 10), nmax);
    check_specializations(r, nmax);
    check_coefficient_families(r, nmax, nmax);
  }
  if (all || suite == Suite::Paths) check_mu_and_fractions(r, 2 * nmax, nmax, nmax, std::min(nmax, 6));
  if (all || suite == Suite::Bijections) check_bijections(r, std::min(nmax, 9), std::min(nmax, 8), std::min(nmax, 6));
  if (all || suite == Suite::Hypergeometric) check_hypergeometric(r);
  if (all || suite == Suite::ProofSteps) check_proof_steps(r, nmax);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"params", c.params}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
  }
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["nmax"] = report.nmax;
  doc["summary"] = {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}};
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " nmax " << report.nmax << ": " << report.checks.size() << " checks, "
      << report.passed() << " passed, " << report.failed() << " failed\n";
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    out << "FAIL " << c.id << " [" << c.params << "] expected " << c.expected << " got " << c.actual << '\n';
  }
  return out.str();
}

}  // namespace qstirling

#pragma once

// Closed double-sum formulas for the q-Stirling numbers, the two identities
// expressing each kind through the other, the coefficient sums their proofs
// reduce to, and exact terminating hypergeometric sums.

#include <variant>
#include <vector>

#include "qstirling/enumerate.hpp"
#include "qstirling/exactmath.hpp"
#include "qstirling/qcomb.hpp"

namespace qstirling {

/// (1-q)^{n-k} S2[n,k] as the double sum over A^{n,k}_{i,j}.
QPoly s2_closed_scaled(int n, int k);
/// (1-q)^{n-k} S2[n,k] as the double sum over A^{n-1,k-1}_{i,j}; n > 0.
QPoly s2_closed_alt_scaled(int n, int k);
/// (1-q)^{n-k} S1[n,k] as the double sum over B^{n,k}_{i,j}.
QPoly s1_closed_scaled(int n, int k);
/// (1-q)^{n-k} S1[n,k] as the double sum over B^{n+1,k+1}_{i,j}.
QPoly s1_closed_alt_scaled(int n, int k);

/// The scaled sums above divided exactly by (1-q)^{n-k}. A remainder means
/// the formula (or a binomial convention) is wrong and raises
/// NonzeroRemainder. The alt form of S2 rejects n = 0.
QPoly s2_closed(int n, int k);
QPoly s2_closed_alt(int n, int k);
QPoly s1_closed(int n, int k);
QPoly s1_closed_alt(int n, int k);

/// Where the inner q-Stirling values of an identity come from.
enum class Source { Enum, Closed, Path };

/// Triangle of one kind of q-Stirling number, rows 0..nmax, together with
/// the method that produced it.
struct Triangle {
  StirlingKind kind = StirlingKind::First;
  int nmax = 0;
  std::vector<std::vector<QPoly>> rows;

  const QPoly& at(int n, int k) const {
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

Triangle source_triangle(StirlingKind kind, int nmax, Source source, const EnumBounds& bounds = {});

/// Largest row of the other kind the identities read for (n,k): 2(n-k),
/// except that for k = 0 < n every term vanishes.
int identity_rows_needed(int n, int k);

/// (-1)^{n-k} sum_j (-1)^j C(n-1+j,n-k+j) C(2n-k,n-k-j) T[n-k+j,j], with T
/// the supplied triangle, which must reach identity_rows_needed(n,k).
QPoly cross_kind_sum(int n, int k, const Triangle& inner);

/// S1[n,k] from S2 values of the selected source. With enumeration as the
/// source, rows up to 2(n-k) must lie within the enumeration bounds.
QPoly identity_first(int n, int k, Source s2_source = Source::Closed, const EnumBounds& bounds = {});
/// S2[n,k] from S1 values of the selected source.
QPoly identity_second(int n, int k, Source s1_source = Source::Closed, const EnumBounds& bounds = {});

/// The q = 0 shadow of the identities over Narayana numbers.
BigInt narayana_identity_rhs(int n, int k);
bool narayana_identity_check(int n, int k);

/// D^{n,k}_{h,i}; requires 0 <= i <= h <= n-k.
BigInt coeff_D(int n, int k, int h, int i);
/// C-bar^{n,k}_{h,i}; requires 0 <= h <= n-k+1 and i >= 0.
BigInt coeff_Cbar(int n, int k, int h, int i);
/// C^{n,k}_{h,i} summed directly over B^{n-k+j,j}_{h,i}; requires
/// 0 <= i <= h <= n-k.
BigInt coeff_C(int n, int k, int h, int i);
/// C = Cbar(h,i) - Cbar(h+1,i+1) = (-1)^{n+k+h+i} A^{n,k}_{h,i}, checked for
/// 1 <= i <= h <= n-k (RangeViolation otherwise).
bool coeff_C_check(int n, int k, int h, int i);
/// E_u as a direct sum; n, k, i, u >= 0.
BigInt coeff_E(int n, int k, int i, int u);

/// Terminating r+1 F r at unit argument.
struct HypSeries {
  std::vector<QRational> upper;
  std::vector<QRational> lower;
};

/// Exact sum of the series. Throws InvalidArgument when the shape is wrong or
/// no upper parameter is a nonpositive integer, and PoleInRange when a lower
/// parameter makes a term's denominator vanish before termination.
QRational pfq_eval(const HypSeries& s);

/// Rising factorial (a)_m.
QRational pochhammer(const QRational& a, int m);

struct SaalschutzParams {
  int m;
  QRational alpha, beta, gamma;
};
struct GaussParams {
  int m;
  QRational alpha, gamma;
};
/// alpha1 is -m; the remaining parameters are free.
struct ContiguityParams {
  int m;
  QRational alpha2, alpha3, alpha4;
  QRational beta1, beta2, beta3;
};
using LemmaParams = std::variant<SaalschutzParams, GaussParams, ContiguityParams>;

/// Both sides of the selected summation lemma evaluated exactly.
struct LemmaSides {
  QRational lhs;
  QRational rhs;
};
LemmaSides summation_lemma_sides(const LemmaParams& params);
bool summation_lemma_check(const LemmaParams& params);

}  // namespace qstirling

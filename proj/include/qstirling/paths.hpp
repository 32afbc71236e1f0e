#pragma once

// Weighted lattice path generating functions computed by dynamic
// programming over (position, height), and their continued-fraction
// counterparts used as an independent cross-check.

#include <functional>
#include <variant>
#include <vector>

#include "qstirling/exactmath.hpp"

namespace qstirling {

using HeightWeight = std::function<XQPoly(int height)>;

/// Motzkin paths of length n: `down(i)` weighs a (1,-1) step starting at
/// height i, `level(i)` a (1,0) step at height i.
struct MotzkinWeights {
  HeightWeight down;
  HeightWeight level;
};

/// Dyck paths of length 2n: `peak(i)` weighs a (1,-1) step starting at
/// height i right after a (1,1) step, `fall(i)` one right after a (1,-1) step.
struct DyckWeights {
  HeightWeight peak;
  HeightWeight fall;
};

/// Schroeder paths of length 2n: `down(i)` weighs a (1,-1) step starting at
/// height i, `level(i)` a (2,0) step at height i.
struct SchroderWeights {
  HeightWeight down;
  HeightWeight level;
};

using WeightSpec = std::variant<MotzkinWeights, DyckWeights, SchroderWeights>;

/// Weighted path sums for every size 0..max_n. For Dyck and Schroeder paths
/// index n is the half-length.
std::vector<XQPoly> path_gf_series(const WeightSpec& spec, int max_n);
XQPoly path_gf(const WeightSpec& spec, int n);

/// Motzkin weights whose path sums are sum_k S2[n,k] x^k.
MotzkinWeights s2_motzkin_weights();
/// Dyck weights whose path sums are sum_k S1[n,k] x^k.
DyckWeights s1_dyck_weights();
/// Schroeder weights whose path sums are sum_k (1-q)^{n-k} S1[n,k] x^k.
SchroderWeights s1_scaled_schroder_weights();

XQPoly s2_via_jfraction(int n);
XQPoly s1_via_tfraction(int n);
XQPoly s1_scaled_via_schroder(int n);

/// mu_{n,k}: Motzkin paths of length n with k level steps, a level step at
/// height h weighing q^h and a down step from height h weighing 1 - q^h.
/// Throws ParityViolation unless n and k have the same parity, and
/// InvalidArgument unless 0 <= k <= n.
QPoly mu_dp(int n, int k);
/// sum_u (-1)^u q^{C(u+1,2)} [k+u choose u]_q (C(n,(n-k)/2-u) - C(n,(n-k)/2-u-1))
QPoly mu_closed(int n, int k);

/// Both sides of the expansion of sum_k (1-q)^{n-k} S1[n,k] x^k over the
/// mu_{n,k}; the left side comes from the Dyck path sums for S1 and the
/// right side from mu_dp.
XQPoly qstsum_lhs(int n);
XQPoly qstsum_rhs(int n);
bool qstsum_check(int n);

/// Power series in z truncated after z^order, coefficients in x over q.
using ZSeries = std::vector<XQPoly>;

/// 1/(1 - b_0 z - a_1 z^2/(1 - b_1 z - a_2 z^2/(...))) expanded to z^order by
/// bottom-up evaluation of the fraction truncated at depth order + 1.
ZSeries jfraction_series(const HeightWeight& a, const HeightWeight& b, int order);
/// 1/(1 - (b_1 - c_1) z - c_1 z/(1 - (b_2 - c_2) z - c_2 z/(...)))
ZSeries tfraction_series(const HeightWeight& b, const HeightWeight& c, int order);
/// 1/(1 - d_0 z - c_1 z/(1 - d_1 z - c_2 z/(...)))
ZSeries schroder_fraction_series(const HeightWeight& c, const HeightWeight& d, int order);

}  // namespace qstirling

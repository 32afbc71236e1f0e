#pragma once

// Integer and q-integer combinatorial primitives: extended binomials,
// Gaussian binomials, Narayana and classical Stirling numbers, and the two
// four-parameter coefficient families A and B that the closed formulas are
// written in.

#include "qstirling/exactmath.hpp"

namespace qstirling {

enum class StirlingKind { First = 1, Second = 2 };

/// Binomial with the extended convention used by the coefficient families:
/// 1 at (-1,-1) and (-2,-2); otherwise 0 when v < 0 or u < v; otherwise
/// u! / (v! (u-v)!).
BigInt binom_ext(long u, long v);

/// Falling-factorial binomial u(u-1)...(u-v+1)/v! for v >= 0 and any integer
/// u; 0 for v < 0. Agrees with binom_ext whenever u >= 0.
BigInt binom_general(long u, long v);

/// Gaussian binomial [n choose k]_q, zero outside 0 <= k <= n.
QPoly qbinom(long n, long k);

/// N(n,k) = C(n,k-1) C(n,k) / n, extended by N(0,0) = 1 and N(n,0) = 0.
BigInt narayana(long n, long k);

BigInt catalan(long n);

/// Unsigned classical Stirling numbers. The second kind uses the alternating
/// sum (1/k!) sum_j (-1)^{k-j} C(k,j) j^n with an exact-division check; the
/// first kind uses c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
BigInt stirling_classical(StirlingKind kind, long n, long k);

/// A^{n,k}_{i,j} = C(n,k+i) C(n,k-j) - C(n,k+i+1) C(n,k-j-1).
BigInt coeff_A(long n, long k, long i, long j);

/// B^{n,k}_{i,j} = C(n+j-1,k-1) C(n-i-1,k-1) - C(n+j,k-1) C(n-i-2,k-1).
BigInt coeff_B(long n, long k, long i, long j);

/// (i+j+1)/(n+1) C(n+1,k-j) C(n+1,k+i+1), with the division checked to be
/// exact. Requires n >= 0.
BigInt coeff_A_factored(long n, long k, long i, long j);

/// (i+j+1)/(n+j) C(n+j,k-1) C(n-i-2,k-2), with the division checked to be
/// exact. Requires n + j != 0.
BigInt coeff_B_factored(long n, long k, long i, long j);

/// True iff the N x N lower-triangular matrices (-1)^{i-j} S1(i,j) and
/// S2(i,j), indices 0..N-1, are inverse to each other.
bool signed_matrix_inverse_check(long size);

}  // namespace qstirling

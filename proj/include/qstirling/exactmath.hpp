#pragma once

// Exact polynomial arithmetic in q, and in x over q, with GMP integer
// coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qstirling {

using BigInt = mpz_class;
using QRational = mpq_class;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Dense, ascending: coefficients()[d] is the coefficient of q^d. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients and
/// two equal polynomials have identical storage.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const BigInt& constant);
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  /// c * q^degree
  static QPoly monomial(const BigInt& c, std::size_t degree);
  /// q^e
  static QPoly q_power(std::size_t e);
  /// [n]_q = 1 + q + ... + q^{n-1}; zero for n <= 0.
  static QPoly q_integer(long n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt encodes degree -infinity (the zero polynomial).
  std::optional<std::size_t> degree() const noexcept;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of q^d; zero past the degree.
  BigInt coeff(std::size_t d) const;

  /// this * q^e
  QPoly shifted(std::size_t e) const;
  /// this * s
  QPoly scaled(const BigInt& s) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);

/// Returns c with a == b * c. Throws DivisionByZero when b is zero and
/// NonzeroRemainder when b does not divide a over the integers.
QPoly poly_divide_exact(const QPoly& a, const QPoly& b);

/// Horner evaluation at an integer point.
BigInt poly_eval_int(const QPoly& a, const BigInt& q0);

/// (1 - q)^m
QPoly one_minus_q_power(std::size_t m);

/// Canonical text: descending powers with explicit '*', e.g.
/// "q^3 + 2*q^2 + 2*q + 1". The zero polynomial renders as "0".
std::string to_string(const QPoly& p);

/// Inverse of to_string; also tolerates arbitrary whitespace and terms in any
/// order. Throws InvalidArgument on malformed input.
QPoly parse_qpoly(std::string_view text);

/// LaTeX body without math delimiters, e.g. "q^{3} + 2q^{2} + 2q + 1".
std::string to_latex(const QPoly& p);

/// Polynomial in x whose coefficients are polynomials in q.
class XQPoly {
 public:
  XQPoly() = default;
  XQPoly(const QPoly& constant);  // NOLINT(google-explicit-constructor)
  explicit XQPoly(std::vector<QPoly> coeffs);

  /// c * x^k
  static XQPoly monomial(const QPoly& c, std::size_t k);
  /// x
  static XQPoly x();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  const std::vector<QPoly>& coefficients() const noexcept { return coeffs_; }

  XQPoly& operator+=(const XQPoly& other);
  XQPoly& operator-=(const XQPoly& other);
  XQPoly& operator*=(const XQPoly& other);

  friend XQPoly operator+(XQPoly a, const XQPoly& b) { return a += b; }
  friend XQPoly operator-(XQPoly a, const XQPoly& b) { return a -= b; }
  friend XQPoly operator*(const XQPoly& a, const XQPoly& b);

  friend bool operator==(const XQPoly& a, const XQPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const XQPoly& a, const XQPoly& b) { return !(a == b); }

 private:
  void trim();

  std::vector<QPoly> coeffs_;
};

/// Coefficient of x^k, zero when k exceeds the degree.
QPoly xqpoly_coeff(const XQPoly& p, std::size_t k);

/// Renders as a sum of "(<qpoly>)*x^k" terms, ascending in x; "0" when zero.
std::string to_string(const XQPoly& p);

}  // namespace qstirling

#include "qstirling/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "qstirling/error.hpp"

namespace qstirling {

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const BigInt& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return QPoly(std::move(coeffs));
}

QPoly QPoly::q_power(std::size_t e) { return monomial(BigInt(1), e); }

QPoly QPoly::q_integer(long n) {
  if (n <= 0) return {};
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

std::optional<std::size_t> QPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt QPoly::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : BigInt(0);
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  std::vector<BigInt> coeffs(e);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(coeffs));
}

QPoly QPoly::scaled(const BigInt& s) const {
  if (s == 0) return {};
  QPoly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly poly_add(const QPoly& a, const QPoly& b) { return a + b; }

QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }

QPoly poly_divide_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};

  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> rem = a.coefficients();
  if (rem.size() < bc.size()) {
    throw Error(ErrorCode::NonzeroRemainder,
                "inexact division: " + to_string(a) + " by " + to_string(b));
  }

  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t d = quot.size(); d-- > 0;) {
    BigInt& top = rem[d + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) {
      throw Error(ErrorCode::NonzeroRemainder,
                  "inexact division: " + to_string(a) + " by " + to_string(b));
    }
    mpz_divexact(quot[d].get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t t = 0; t <= db; ++t) {
      mpz_submul(rem[d + t].get_mpz_t(), quot[d].get_mpz_t(), bc[t].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) {
      throw Error(ErrorCode::NonzeroRemainder,
                  "inexact division: " + to_string(a) + " by " + to_string(b));
    }
  }
  return QPoly(std::move(quot));
}

BigInt poly_eval_int(const QPoly& a, const BigInt& q0) {
  BigInt acc = 0;
  const auto& c = a.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

QPoly one_minus_q_power(std::size_t m) {
  std::vector<BigInt> coeffs(m + 1);
  BigInt binom;
  for (std::size_t d = 0; d <= m; ++d) {
    mpz_bin_uiui(binom.get_mpz_t(), m, d);
    coeffs[d] = (d % 2 == 0) ? binom : BigInt(-binom);
  }
  return QPoly(std::move(coeffs));
}

namespace {

// Shared by the canonical and LaTeX renderers: only the monomial spelling
// differs.
template <typename MonomialFn>
std::string render_terms(const QPoly& p, MonomialFn&& monomial) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] == 0) continue;
    const bool negative = c[d] < 0;
    BigInt magnitude = abs(c[d]);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += monomial(magnitude, d);
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p) {
  return render_terms(p, [](const BigInt& m, std::size_t d) {
    if (d == 0) return m.get_str();
    std::string var = d == 1 ? "q" : "q^" + std::to_string(d);
    return m == 1 ? var : m.get_str() + "*" + var;
  });
}

std::string to_latex(const QPoly& p) {
  return render_terms(p, [](const BigInt& m, std::size_t d) {
    if (d == 0) return m.get_str();
    std::string var = d == 1 ? "q" : "q^{" + std::to_string(d) + "}";
    return m == 1 ? var : m.get_str() + var;
  });
}

QPoly parse_qpoly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> Error {
    return Error(ErrorCode::InvalidArgument, "malformed polynomial: '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail();

  QPoly result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail();
    }
    first = false;

    std::size_t digits_end = pos;
    while (digits_end < s.size() && std::isdigit(static_cast<unsigned char>(s[digits_end]))) {
      ++digits_end;
    }
    BigInt coeff = 1;
    const bool has_digits = digits_end > pos;
    if (has_digits) coeff = BigInt(s.substr(pos, digits_end - pos));
    pos = digits_end;

    std::size_t degree = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'q')) {
      if (s[pos] == '*') {
        if (!has_digits) throw fail();
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'q') throw fail();
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t exp_end = pos;
        while (exp_end < s.size() && std::isdigit(static_cast<unsigned char>(s[exp_end]))) {
          ++exp_end;
        }
        if (exp_end == pos) throw fail();
        degree = std::stoul(s.substr(pos, exp_end - pos));
        pos = exp_end;
      }
    } else if (!has_digits) {
      throw fail();
    }
    if (negative) coeff = -coeff;
    result += QPoly::monomial(coeff, degree);
  }
  return result;
}

XQPoly::XQPoly(const QPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

XQPoly::XQPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XQPoly XQPoly::monomial(const QPoly& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<QPoly> coeffs(k + 1);
  coeffs[k] = c;
  return XQPoly(std::move(coeffs));
}

XQPoly XQPoly::x() { return monomial(QPoly(1), 1); }

std::optional<std::size_t> XQPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

XQPoly& XQPoly::operator+=(const XQPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

XQPoly& XQPoly::operator-=(const XQPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

XQPoly operator*(const XQPoly& a, const XQPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XQPoly(std::move(out));
}

XQPoly& XQPoly::operator*=(const XQPoly& other) {
  *this = *this * other;
  return *this;
}

void XQPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly xqpoly_coeff(const XQPoly& p, std::size_t k) {
  const auto& c = p.coefficients();
  return k < c.size() ? c[k] : QPoly();
}

std::string to_string(const XQPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c[k]) << ')';
    if (k == 1) out << "*x";
    if (k > 1) out << "*x^" << k;
  }
  return out.str();
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::BoundExceeded: return "bound-exceeded";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NonzeroRemainder: return "nonzero-remainder";
    case ErrorCode::ParityViolation: return "parity-violation";
    case ErrorCode::PoleInRange: return "pole-in-range";
    case ErrorCode::InvalidWeight: return "invalid-weight";
    case ErrorCode::RangeViolation: return "range-violation";
  }
  return "unknown";
}

}  // namespace qstirling

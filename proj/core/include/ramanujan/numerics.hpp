#pragma once

// Arbitrary-precision substrate: precision contexts, the BigReal value type,
// exact rationals and the nome type shared by every series evaluator.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramanujan {

using Rational = mpq_class;

/// Raised when two independent evaluation routes for the same quantity
/// disagree beyond their stated tolerance. Indicates an implementation fault,
/// never bad user input.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested output digits plus internal slack. Immutable once built; use
/// make_context() to construct one.
class PrecisionContext {
 public:
  static constexpr int kDefaultGuardDigits = 15;
  static constexpr int kMinDecimalDigits = 10;

  int decimal_digits() const { return decimal_digits_; }
  int guard_digits() const { return guard_digits_; }
  mpfr_prec_t working_precision() const { return working_precision_; }

  /// Same guard digits, `extra` more requested digits.
  PrecisionContext escalated(int extra) const;

 private:
  PrecisionContext(int decimal_digits, int guard_digits, mpfr_prec_t bits)
      : decimal_digits_(decimal_digits), guard_digits_(guard_digits),
        working_precision_(bits) {}

  friend PrecisionContext make_context(int, int);

  int decimal_digits_;
  int guard_digits_;
  mpfr_prec_t working_precision_;
};

/// working_precision = ceil((digits + guard) * log2(10)) bits.
/// Throws std::invalid_argument for digits < 10 or guard < 1.
PrecisionContext make_context(int decimal_digits,
                              int guard_digits = PrecisionContext::kDefaultGuardDigits);

/// RAII value wrapper over an mpfr_t. Binary operations produce a result at
/// the larger of the two operand precisions, rounded to nearest.
class BigReal {
 public:
  explicit BigReal(const PrecisionContext& ctx);
  BigReal(const PrecisionContext& ctx, long value);
  BigReal(const PrecisionContext& ctx, const Rational& value);
  BigReal(const PrecisionContext& ctx, const mpz_class& value);
  explicit BigReal(mpfr_prec_t bits);

  /// Parses a decimal literal ("0.1", "-2.5e-3") correctly rounded.
  static BigReal parse(const PrecisionContext& ctx, std::string_view text);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-10 exponent e with 10^(e-1) <= |x| < 10^e; meaningless for zero.
  long decimal_exponent() const;

  /// `digits` significant decimal digits. Fixed notation for moderate
  /// magnitudes, otherwise d.ddd...e±x. Deterministic for a given value.
  std::string to_string(int digits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator-(const BigReal& x);
  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  friend BigReal operator+(long lhs, BigReal rhs) { return rhs += lhs; }
  friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator-(long lhs, const BigReal& rhs);
  friend BigReal operator/(long lhs, const BigReal& rhs);

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, long b);
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  void grow_to(mpfr_prec_t bits);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
BigReal pow_int(const BigReal& x, long k);
BigReal pi(const PrecisionContext& ctx);
/// 10^e exactly rounded at the context's working precision.
BigReal pow10(const PrecisionContext& ctx, long e);

/// Principal positive real power x^r. Throws std::domain_error for x <= 0.
BigReal pow_rational(const BigReal& x, const Rational& r, const PrecisionContext& ctx);

/// |a-b| / max(|a|, |b|, 1).
BigReal relative_residual(const BigReal& a, const BigReal& b);
/// |a-b| / max(|a|, |b|); zero when both are zero.
BigReal relative_difference(const BigReal& a, const BigReal& b);

/// Exact rational from "p/q", "-7", "0.125" or "1.5e-3".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

/// A real nome 0 < q <= max_q < 1. The ceiling keeps every truncation bound
/// finite; the default 9/10 is far above any nome used in practice.
class Nome {
 public:
  Nome(BigReal q, const PrecisionContext& ctx);
  Nome(BigReal q, BigReal max_q);

  const BigReal& value() const { return q_; }
  const BigReal& max_q() const { return max_q_; }
  /// n with q = e^{-pi sqrt(n)}, when the nome was built that way.
  const std::optional<Rational>& n_label() const { return n_; }

  /// q^k for k >= 1; carries the n label forward as k^2 n.
  Nome power(unsigned k) const;

 private:
  friend Nome nome_from_n(const Rational& n, const PrecisionContext& ctx);

  BigReal q_;
  BigReal max_q_;
  std::optional<Rational> n_;
};

/// q = e^{-pi sqrt(n)}. Throws std::invalid_argument for n <= 0 and
/// std::domain_error when q would exceed the nome ceiling.
Nome nome_from_n(const Rational& n, const PrecisionContext& ctx);

/// 10^{-(digits + guard/2)}: ceiling for any discarded series tail.
BigReal tail_target(const PrecisionContext& ctx);

}  // namespace ramanujan

#include "ramanujan/numerics.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <string>

namespace ramanujan {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

mpfr_prec_t bits_for(int digits, int guard) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * kLog2Of10));
}

}  // namespace

PrecisionContext make_context(int decimal_digits, int guard_digits) {
  if (decimal_digits < PrecisionContext::kMinDecimalDigits)
    throw std::invalid_argument("decimal_digits must be at least 10, got " +
                                std::to_string(decimal_digits));
  if (guard_digits < 1)
    throw std::invalid_argument("guard_digits must be positive");
  return PrecisionContext(decimal_digits, guard_digits,
                          bits_for(decimal_digits, guard_digits));
}

PrecisionContext PrecisionContext::escalated(int extra) const {
  return make_context(decimal_digits_ + extra, guard_digits_);
}

// ---------------------------------------------------------------------------
// BigReal

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const PrecisionContext& ctx) : BigReal(ctx.working_precision()) {}

BigReal::BigReal(const PrecisionContext& ctx, long value) : BigReal(ctx) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const PrecisionContext& ctx, const Rational& value) : BigReal(ctx) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const PrecisionContext& ctx, const mpz_class& value) : BigReal(ctx) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const PrecisionContext& ctx, std::string_view text) {
  BigReal out(ctx);
  std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size())
    throw std::invalid_argument("not a decimal literal: '" + buf + "'");
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::grow_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

long BigReal::decimal_exponent() const {
  if (is_zero() || !is_finite()) return 0;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, 2, value_, MPFR_RNDN);
  mpfr_free_str(s);
  return static_cast<long>(e);
}

std::string BigReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";

  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);

  std::string sign_str;
  if (!mant.empty() && mant[0] == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }

  // value = 0.mant * 10^e
  std::string out;
  if (e <= 0 && e > -8) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
  } else if (e > 0 && e < static_cast<mpfr_exp_t>(mant.size())) {
    out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
  } else if (e == static_cast<mpfr_exp_t>(mant.size())) {
    out = mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return sign_str + out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_neg(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(long lhs, const BigReal& rhs) {
  BigReal out(rhs.precision());
  mpfr_si_sub(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(long lhs, const BigReal& rhs) {
  BigReal out(rhs.precision());
  mpfr_si_div(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

// ---------------------------------------------------------------------------
// Free functions

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of a negative value");
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("log of a non-positive value");
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal pow_int(const BigReal& x, long k) {
  BigReal out(x.precision());
  mpfr_pow_si(out.get(), x.get(), k, MPFR_RNDN);
  return out;
}

BigReal pi(const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigReal pow10(const PrecisionContext& ctx, long e) {
  BigReal out(ctx, 10);
  mpfr_pow_si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

BigReal pow_rational(const BigReal& x, const Rational& r, const PrecisionContext& ctx) {
  if (x.sign() <= 0)
    throw std::domain_error("pow_rational requires a positive base");
  BigReal base(ctx);
  mpfr_set(base.get(), x.get(), MPFR_RNDN);
  if (r == 0) return BigReal(ctx, 1L);
  if (r == 1) return base;

  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (num.fits_slong_p() && den.fits_ulong_p()) {
    BigReal root(ctx.working_precision() + 16);
    mpfr_rootn_ui(root.get(), base.get(), den.get_ui(), MPFR_RNDN);
    mpfr_pow_si(root.get(), root.get(), num.get_si(), MPFR_RNDN);
    BigReal out(ctx);
    mpfr_set(out.get(), root.get(), MPFR_RNDN);
    return out;
  }
  BigReal exponent(ctx, r);
  return exp(exponent * log(base));
}

BigReal relative_residual(const BigReal& a, const BigReal& b) {
  mpfr_prec_t bits = std::max(a.precision(), b.precision());
  BigReal scale(bits);
  mpfr_set_si(scale.get(), 1, MPFR_RNDN);
  scale = max(scale, max(abs(a), abs(b)));
  return abs(a - b) / scale;
}

BigReal relative_difference(const BigReal& a, const BigReal& b) {
  BigReal scale = max(abs(a), abs(b));
  if (scale.is_zero()) return scale;
  return abs(a - b) / scale;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational out = num / den;
    out.canonicalize();
    return out;
  }

  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) return fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    std::string rest = s.substr(i + 1);
    if (rest.empty()) return fail();
    size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != rest.size()) return fail();
  }
  mpz_class mant(digits, 10);
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational out = shift < 0 ? Rational(mant, scale) : Rational(mant * scale, 1);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Nome

Nome::Nome(BigReal q, const PrecisionContext& ctx)
    : Nome(std::move(q), BigReal(ctx, Rational(9, 10))) {}

Nome::Nome(BigReal q, BigReal max_q) : q_(std::move(q)), max_q_(std::move(max_q)) {
  if (!(max_q_ < 1) || !(max_q_ > 0))
    throw std::invalid_argument("nome ceiling must lie in (0, 1)");
  if (!(q_ > 0)) throw std::domain_error("nome must be positive");
  if (q_ > max_q_)
    throw std::domain_error("nome " + q_.to_string(12) + " exceeds ceiling " +
                            max_q_.to_string(6));
}

Nome Nome::power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("nome power must be at least 1");
  Nome out(pow_int(q_, static_cast<long>(k)), max_q_);
  if (n_) out.n_ = *n_ * Rational(static_cast<long>(k) * static_cast<long>(k));
  return out;
}

Nome nome_from_n(const Rational& n, const PrecisionContext& ctx) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  BigReal arg = pi(ctx) * sqrt(BigReal(ctx, n));
  Nome out(exp(-arg), ctx);
  out.n_ = n;
  return out;
}

BigReal tail_target(const PrecisionContext& ctx) {
  return pow10(ctx, -(ctx.decimal_digits() + ctx.guard_digits() / 2));
}

}  // namespace ramanujan

#include "ramanujan/qseries.hpp"

#include <string>

namespace ramanujan {

namespace {

constexpr long kMaxTerms = 10'000'000;

void require_argument(const BigReal& x, const PrecisionContext& ctx, const char* what) {
  if (!(abs(x) <= BigReal(ctx, Rational(9, 10))))
    throw std::domain_error(std::string(what) + ": |argument| must not exceed 9/10, got " +
                            x.to_string(12));
}

BigReal working(const BigReal& x, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

[[noreturn]] void too_many_terms(const char* what) {
  throw std::runtime_error(std::string(what) + ": truncation did not terminate");
}

// Sums t_k, t_{k+1} = t_k * c * r^k, from k = k0, until the geometric bound
// |t_k| / (1 - |c||r|^k) on the remaining terms drops below `target`.
struct SideSum {
  BigReal sum;
  long terms;
  BigReal tail;
};

SideSum sum_side(BigReal term, const BigReal& c, const BigReal& r, long k0,
                 const BigReal& target, const PrecisionContext& ctx) {
  BigReal sum(ctx);
  BigReal r_pow = pow_int(r, k0);
  const BigReal abs_c = abs(c);
  long k = k0;
  long used = 0;
  for (;; ++k, ++used) {
    if (used > kMaxTerms) too_many_terms("f_general");
    BigReal ratio_bound = abs_c * abs(r_pow);
    if (ratio_bound * 2 < 1) {
      BigReal tail = abs(term) / (1 - ratio_bound);
      if (tail < target) return {std::move(sum), used, std::move(tail)};
    }
    sum += term;
    term *= c;
    term *= r_pow;
    r_pow *= r;
  }
}

}  // namespace

SeriesValue phi_series(const BigReal& x_in, const PrecisionContext& ctx) {
  require_argument(x_in, ctx, "phi");
  const BigReal x = working(x_in, ctx);
  const BigReal target = tail_target(ctx);
  const BigReal denom = 1 - abs(x);
  const BigReal x2 = x * x;

  BigReal sum(ctx, 1L);
  BigReal term = x;       // x^{n^2}
  BigReal step = x2 * x;  // x^{2n+1}
  long n = 1;
  for (;; ++n) {
    if (n > kMaxTerms) too_many_terms("phi");
    BigReal tail = 2 * abs(term) / denom;
    if (tail < target) return {std::move(sum), {n, std::move(tail)}};
    sum += 2 * term;
    term *= step;
    step *= x2;
  }
}

SeriesValue psi_series(const BigReal& x_in, const PrecisionContext& ctx) {
  require_argument(x_in, ctx, "psi");
  const BigReal x = working(x_in, ctx);
  const BigReal target = tail_target(ctx);
  const BigReal denom = 1 - abs(x);

  BigReal sum(ctx);
  BigReal term(ctx, 1L);  // x^{n(n+1)/2}
  BigReal step = x;       // x^{n+1}
  long n = 0;
  for (;; ++n) {
    if (n > kMaxTerms) too_many_terms("psi");
    BigReal tail = abs(term) / denom;
    if (tail < target) return {std::move(sum), {n, std::move(tail)}};
    sum += term;
    term *= step;
    step *= x;
  }
}

SeriesValue f_neg_series(const BigReal& x_in, const PrecisionContext& ctx) {
  require_argument(x_in, ctx, "f_neg");
  const BigReal x = working(x_in, ctx);
  const BigReal target = tail_target(ctx);
  const BigReal denom = 1 - abs(x);
  const BigReal x3 = x * x * x;

  BigReal sum(ctx, 1L);
  BigReal pent = x;        // x^{k(3k-1)/2}
  BigReal xk = x;          // x^k
  BigReal step = x3 * x;   // x^{3k+1}
  long k = 1;
  for (;; ++k) {
    if (k > kMaxTerms) too_many_terms("f_neg");
    BigReal tail = 2 * abs(pent) / denom;
    if (tail < target) return {std::move(sum), {2 * k - 1, std::move(tail)}};
    BigReal pair = pent + pent * xk;
    if (k % 2 == 1)
      sum -= pair;
    else
      sum += pair;
    pent *= step;
    step *= x3;
    xk *= x;
  }
}

SeriesValue f_general_series(const BigReal& a_in, const BigReal& b_in,
                             const PrecisionContext& ctx) {
  const BigReal a = working(a_in, ctx);
  const BigReal b = working(b_in, ctx);
  const BigReal ab = a * b;
  if (!(abs(ab) < 1))
    throw std::domain_error("f_general requires |ab| < 1, got ab = " + ab.to_string(12));
  const BigReal half_target = tail_target(ctx) / 2;

  // n >= 0: a^{n(n+1)/2} b^{n(n-1)/2};  n = -m: a^{m(m-1)/2} b^{m(m+1)/2}.
  SideSum pos = sum_side(BigReal(ctx, 1L), a, ab, 0, half_target, ctx);
  SideSum neg = sum_side(b, b, ab, 1, half_target, ctx);
  return {pos.sum + neg.sum, {pos.terms + neg.terms, pos.tail + neg.tail}};
}

SeriesValue qpochhammer_series(const BigReal& a_in, const BigReal& base_in,
                               const PrecisionContext& ctx) {
  require_argument(base_in, ctx, "qpochhammer");
  const BigReal a = working(a_in, ctx);
  const BigReal base = working(base_in, ctx);
  const BigReal target = tail_target(ctx);
  const BigReal abs_a = abs(a);
  const BigReal one_minus_base = 1 - abs(base);

  BigReal product(ctx, 1L);
  BigReal power(ctx, 1L);  // base^n
  long n = 0;
  for (;; ++n) {
    if (n > kMaxTerms) too_many_terms("qpochhammer");
    // |log prod_{k>=n}(1 - a base^k)| <= u / ((1-|base|)(1-u)),  u = |a||base|^n
    BigReal u = abs_a * abs(power);
    if (u * 2 < 1) {
      BigReal eps = u / (one_minus_base * (1 - u));
      BigReal tail = 2 * eps * max(abs(product), BigReal(ctx, 1L));
      if (tail < target) return {std::move(product), {n, std::move(tail)}};
    }
    BigReal factor = 1 - a * power;
    if (factor.is_zero())
      throw std::domain_error("qpochhammer: factor 1 - a q^" + std::to_string(n) + " vanishes");
    product *= factor;
    power *= base;
  }
}

BigReal phi(const Nome& q, const PrecisionContext& ctx) {
  return phi_series(q.value(), ctx).value;
}

BigReal psi(const Nome& q, const PrecisionContext& ctx) {
  return psi_series(q.value(), ctx).value;
}

BigReal f_neg(const Nome& q, const PrecisionContext& ctx) {
  return f_neg_series(q.value(), ctx).value;
}

BigReal f_general(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  return f_general_series(a, b, ctx).value;
}

BigReal qpochhammer(const BigReal& a, const Nome& q, const PrecisionContext& ctx) {
  return qpochhammer_series(a, q.value(), ctx).value;
}

BigReal chi(const Nome& q, const PrecisionContext& ctx) {
  const BigReal& x = q.value();
  return qpochhammer_series(-x, x * x, ctx).value;
}

BigReal f_pos(const Nome& q, const PrecisionContext& ctx) {
  const BigReal& x = q.value();
  BigReal f2 = f_neg_series(x * x, ctx).value;
  BigReal f1 = f_neg_series(x, ctx).value;
  BigReal f4 = f_neg_series(pow_int(x, 4), ctx).value;
  return f2 * f2 * f2 / (f1 * f4);
}

}  // namespace ramanujan

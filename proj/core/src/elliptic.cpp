#include "ramanujan/elliptic.hpp"

#include "ramanujan/qseries.hpp"

namespace ramanujan {

Modulus::Modulus(BigReal alpha, BigReal complement, std::optional<Rational> n_label)
    : alpha_(std::move(alpha)), complement_(std::move(complement)), n_label_(std::move(n_label)) {
  if (!(alpha_ > 0) || !(alpha_ < 1))
    throw std::domain_error("modulus alpha must lie in (0, 1), got " + alpha_.to_string(12));
  if (!(complement_ > 0) || !(complement_ < 1))
    throw std::domain_error("complementary modulus must lie in (0, 1), got " +
                            complement_.to_string(12));
}

namespace {

constexpr long kMaxTerms = 50'000'000;

// sum ((1/2)_n / n!)^2 z^n; terms decrease, so the tail after term n is
// bounded by c_n z^n / (1 - z).
BigReal hyp_series(const BigReal& z, const BigReal& one_minus_z, const PrecisionContext& ctx) {
  const BigReal target = tail_target(ctx);
  BigReal sum(ctx);
  BigReal term(ctx, 1L);
  for (long n = 0;; ++n) {
    if (n > kMaxTerms) throw std::runtime_error("hyp2f1_half: series did not terminate");
    if (term / one_minus_z < target) return sum;
    sum += term;
    term *= z;
    term *= (2 * n + 1) * (2 * n + 1);
    term /= 4 * (n + 1) * (n + 1);
  }
}

// Expansion about z = 1 with w = 1 - z = k'^2:
//   K = sum c_n w^n (ln(4/k') - d_n),  d_n = sum_{j<=n} 1/(j(2j-1)),
// and 2F1 = (2/pi) K. Each bracket lies in (ln(1/k'), ln(4/k')].
BigReal hyp_log_series(const BigReal& w, const PrecisionContext& ctx) {
  const BigReal target = tail_target(ctx);
  const BigReal log4 = log(BigReal(ctx, 4L));
  const BigReal big_l = log4 - log(w) / 2;
  const BigReal tail_scale = big_l / (1 - w);

  BigReal sum(ctx);
  BigReal coeff(ctx, 1L);  // c_n w^n
  BigReal d(ctx);
  for (long n = 0;; ++n) {
    if (n > kMaxTerms) throw std::runtime_error("hyp2f1_half: log series did not terminate");
    if (n > 0) {
      coeff *= w;
      coeff *= (2 * n - 1) * (2 * n - 1);
      coeff /= 4 * n * n;
      d += BigReal(ctx, Rational(1, n * (2 * n - 1)));
    }
    if (coeff * tail_scale < target) break;
    sum += coeff * (big_l - d);
  }
  return 2 * sum / pi(ctx);
}

}  // namespace

BigReal hyp2f1_half(const BigReal& z, const BigReal& one_minus_z, const PrecisionContext& ctx) {
  if (z.sign() < 0) throw std::domain_error("hyp2f1_half requires z >= 0");
  if (!(one_minus_z > 0)) throw std::domain_error("hyp2f1_half requires z < 1 (series diverges)");
  BigReal zw(ctx), ww(ctx);
  mpfr_set(zw.get(), z.get(), MPFR_RNDN);
  mpfr_set(ww.get(), one_minus_z.get(), MPFR_RNDN);
  if (zw * 2 <= 1) return hyp_series(zw, ww, ctx);
  return hyp_log_series(ww, ctx);
}

BigReal hyp2f1_half(const BigReal& z, const PrecisionContext& ctx) {
  BigReal zw(ctx);
  mpfr_set(zw.get(), z.get(), MPFR_RNDN);
  return hyp2f1_half(zw, 1 - zw, ctx);
}

BigReal ellipK(const BigReal& k, const PrecisionContext& ctx) {
  if (k.sign() < 0 || !(k < 1)) throw std::domain_error("ellipK requires 0 <= k < 1");
  BigReal kw(ctx);
  mpfr_set(kw.get(), k.get(), MPFR_RNDN);
  BigReal z = kw * kw;
  return pi(ctx) / 2 * hyp2f1_half(z, (1 - kw) * (1 + kw), ctx);
}

Modulus alpha_from_nome(const Nome& q, const PrecisionContext& ctx) {
  const BigReal& x = q.value();

  // (f(q) / (sqrt(2) q^{1/8} f(-q^4)))^{-8} = 16 q f(-q^4)^8 / f(q)^8
  BigReal f4 = f_neg_series(pow_int(x, 4), ctx).value;
  BigReal fq = f_pos(q, ctx);
  BigReal alpha = 16 * x * pow_int(f4 / fq, 8);

  BigReal theta_ratio = phi_series(-x, ctx).value / phi_series(x, ctx).value;
  BigReal complement = pow_int(theta_ratio, 4);

  BigReal gap = abs(alpha + complement - 1);
  if (gap > pow10(ctx, -(ctx.decimal_digits() - 5)))
    throw InconsistencyError("alpha routes disagree at q = " + x.to_string(20) + ": |gap| = " +
                             gap.to_string(5));
  return Modulus(std::move(alpha), std::move(complement), q.n_label());
}

Modulus singular_alpha(const Rational& n, const PrecisionContext& ctx) {
  return alpha_from_nome(nome_from_n(n, ctx), ctx);
}

BigReal period_ratio(const Modulus& m, const PrecisionContext& ctx) {
  return hyp2f1_half(m.complement(), m.alpha(), ctx) /
         hyp2f1_half(m.alpha(), m.complement(), ctx);
}

BigReal verify_degree(const Nome& q, unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  Modulus a = alpha_from_nome(q, ctx);
  Modulus b = alpha_from_nome(q.power(n), ctx);
  BigReal ratio = period_ratio(b, ctx) / period_ratio(a, ctx);
  return abs(ratio - static_cast<long>(n));
}

}  // namespace ramanujan

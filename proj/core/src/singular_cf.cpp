#include "ramanujan/singular_cf.hpp"

#include "ramanujan/elliptic.hpp"
#include "ramanujan/qseries.hpp"

namespace ramanujan {

namespace {

BigReal at_working(const BigReal& x, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

// sqrt(a) -/+ sqrt(b) where a - b = 1.
BigReal unit_gap_pair(const BigReal& a, const BigReal& b, Branch branch) {
  BigReal sum = sqrt(a) + sqrt(b);
  return branch == Branch::nine_n ? 1 / sum : sum;
}

BigReal convergent(const BigReal& x, const BigReal& q, long depth, const PrecisionContext& ctx) {
  if (depth < 1) throw std::invalid_argument("continued fraction depth must be positive");
  BigReal tail(ctx, 1L);
  for (long i = depth; i >= 1; --i) {
    BigReal a = (i % 2 == 1) ? pow_int(x, i) : pow_int(x, i / 2) + pow_int(x, i);
    tail = 1 + a / tail;
  }
  return pow_rational(q, Rational(1, 8), ctx) / tail;
}

CFState adaptive(const Nome& q, bool signed_variant, long max_terms, const PrecisionContext& ctx) {
  if (max_terms < 4) throw std::invalid_argument("max_terms must be at least 4");
  const BigReal qv = at_working(q.value(), ctx);
  const BigReal x = signed_variant ? -qv : qv;
  const BigReal target = tail_target(ctx);

  long depth = 4;
  BigReal prev = convergent(x, qv, depth, ctx);
  while (depth < max_terms) {
    depth = std::min(2 * depth, max_terms);
    BigReal cur = convergent(x, qv, depth, ctx);
    if (abs(cur - prev) < target) return {depth, std::move(cur), std::move(prev)};
    prev = std::move(cur);
  }
  throw std::runtime_error("continued fraction did not converge within " +
                           std::to_string(max_terms) + " terms");
}

}  // namespace

GRadicals g_radicals(const BigReal& g_in, Branch branch, const PrecisionContext& ctx) {
  if (!(g_in > 0)) throw std::domain_error("class invariant g must be positive");
  const BigReal g = at_working(g_in, ctx);
  const BigReal g4 = pow_int(g, 4);
  const BigReal g8 = g4 * g4;
  const BigReal g12 = g8 * g4;
  const BigReal r = sqrt(g8 * g8 - g8 + 1);
  return {1 / (sqrt(g12 * g12 + 1) + g12), 1 / (sqrt(g8 + 1) + g4),
          unit_gap_pair((g8 + 1 + r) / 2, (g8 - 1 + r) / 2, branch)};
}

BigReal alpha_from_g_branch(const BigReal& g, Branch branch, const PrecisionContext& ctx) {
  GRadicals rad = g_radicals(g, branch, ctx);
  return pow_int(rad.outer, 2) * pow_int(rad.middle, 4) * pow_int(rad.inner, 8);
}

BigReal alpha_9n(const BigReal& g, const PrecisionContext& ctx) {
  return alpha_from_g_branch(g, Branch::nine_n, ctx);
}

BigReal alpha_n_over_9(const BigReal& g, const PrecisionContext& ctx) {
  return alpha_from_g_branch(g, Branch::n_over_nine, ctx);
}

BigReal alpha_pair_product(const BigReal& g, const PrecisionContext& ctx) {
  GRadicals rad = g_radicals(g, Branch::nine_n, ctx);
  return pow_int(rad.outer, 4) * pow_int(rad.middle, 8);
}

BigReal s1_product(const Nome& q, const PrecisionContext& ctx) {
  const BigReal x = at_working(q.value(), ctx);
  const BigReal x2 = x * x;
  return pow_rational(x, Rational(1, 8), ctx) * qpochhammer_series(-x2, x2, ctx).value /
         qpochhammer_series(-x, x2, ctx).value;
}

BigReal s2_product(const Nome& q, const PrecisionContext& ctx) {
  const BigReal x = at_working(q.value(), ctx);
  const BigReal x2 = x * x;
  return pow_rational(x, Rational(1, 8), ctx) * qpochhammer_series(-x2, x2, ctx).value /
         qpochhammer_series(x, x2, ctx).value;
}

BigReal s1_convergent(const Nome& q, long depth, const PrecisionContext& ctx) {
  const BigReal qv = at_working(q.value(), ctx);
  return convergent(qv, qv, depth, ctx);
}

BigReal s2_convergent(const Nome& q, long depth, const PrecisionContext& ctx) {
  const BigReal qv = at_working(q.value(), ctx);
  return convergent(-qv, qv, depth, ctx);
}

CFState s1_cf(const Nome& q, long max_terms, const PrecisionContext& ctx) {
  return adaptive(q, false, max_terms, ctx);
}

CFState s2_cf(const Nome& q, long max_terms, const PrecisionContext& ctx) {
  return adaptive(q, true, max_terms, ctx);
}

BigReal s1_singular(const Rational& n, const PrecisionContext& ctx) {
  Modulus m = singular_alpha(n, ctx);
  return pow_rational(m.alpha(), Rational(1, 8), ctx) / sqrt(BigReal(ctx, 2L));
}

BigReal s1_from_g(const BigReal& g, Branch branch, const PrecisionContext& ctx) {
  GRadicals rad = g_radicals(g, branch, ctx);
  return pow_rational(rad.outer, Rational(1, 4), ctx) * sqrt(rad.middle) * rad.inner /
         sqrt(BigReal(ctx, 2L));
}

BigReal s2_from_G(const BigReal& G_in, Branch branch, const PrecisionContext& ctx) {
  if (!(G_in >= 1)) throw std::domain_error("s2_from_G requires G >= 1");
  const BigReal G = at_working(G_in, ctx);
  const BigReal G4 = pow_int(G, 4);
  const BigReal G8 = G4 * G4;
  const BigReal G12 = G8 * G4;
  const BigReal outer = 1 / (G12 + sqrt(G12 * G12 - 1));
  const BigReal middle = 1 / (G4 + sqrt(G8 - 1));
  const BigReal t = sqrt(G8 * G8 + G8 + 1);
  const BigReal inner = unit_gap_pair((G8 + 1 + t) / 2, (G8 - 1 + t) / 2, branch);
  return pow_rational(outer, Rational(1, 4), ctx) * sqrt(middle) * inner / sqrt(BigReal(ctx, 2L));
}

}  // namespace ramanujan

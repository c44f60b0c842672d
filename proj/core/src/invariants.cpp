#include "ramanujan/invariants.hpp"

#include "ramanujan/qseries.hpp"

namespace ramanujan {

namespace {

// 2^{-1/4} q^{-1/24}
BigReal invariant_prefactor(const Nome& q, const PrecisionContext& ctx) {
  return pow_rational(BigReal(ctx, 2L), Rational(-1, 4), ctx) *
         pow_rational(q.value(), Rational(-1, 24), ctx);
}

ClassInvariant compute(InvariantKind kind, const Rational& n, const PrecisionContext& ctx) {
  Nome q = nome_from_n(n, ctx);
  const BigReal& x = q.value();
  const BigReal x2 = x * x;
  const BigReal f_neg_x2 = f_neg_series(x2, ctx).value;

  BigReal by_product(ctx), by_quotient(ctx);
  if (kind == InvariantKind::G) {
    by_product = qpochhammer_series(-x, x2, ctx).value;
    by_quotient = f_pos(q, ctx) / f_neg_x2;
  } else {
    by_product = qpochhammer_series(x, x2, ctx).value;
    by_quotient = f_neg_series(x, ctx).value / f_neg_x2;
  }
  if (relative_difference(by_product, by_quotient) > pow10(ctx, -(ctx.decimal_digits() - 5)))
    throw InconsistencyError(invariant_name(kind, n) + ": chi routes disagree");

  return {kind, n, invariant_prefactor(q, ctx) * by_product, registry_lookup(kind, n)};
}

}  // namespace

ClassInvariant G_numeric(const Rational& n, const PrecisionContext& ctx) {
  return compute(InvariantKind::G, n, ctx);
}

ClassInvariant g_numeric(const Rational& n, const PrecisionContext& ctx) {
  return compute(InvariantKind::g, n, ctx);
}

ClassInvariant class_invariant(InvariantKind kind, const Rational& n, const PrecisionContext& ctx) {
  return compute(kind, n, ctx);
}

Modulus alpha_from_g(const BigReal& g, const PrecisionContext& ctx) {
  if (!(g > 0)) throw std::domain_error("alpha_from_g requires g > 0");
  BigReal gw(ctx);
  mpfr_set(gw.get(), g.get(), MPFR_RNDN);
  BigReal g12 = pow_int(gw, 12);
  // sqrt(g^24 + 1) - g^12 without the cancellation
  BigReal root = 1 / (sqrt(g12 * g12 + 1) + g12);
  BigReal complement = 2 * g12 * root;
  return Modulus(root * root, std::move(complement));
}

Modulus alpha_from_g(const ClassInvariant& inv, const PrecisionContext& ctx) {
  if (inv.kind != InvariantKind::g)
    throw std::invalid_argument("alpha_from_g needs a g invariant, got " +
                                invariant_name(inv.kind, inv.n));
  Modulus m = alpha_from_g(inv.value, ctx);
  return Modulus(m.alpha(), m.complement(), inv.n);
}

BigReal invariant_residual(const ClassInvariant& inv, const PrecisionContext& ctx) {
  Modulus m = singular_alpha(inv.n, ctx);
  BigReal lhs = 1 / pow_int(inv.value, 24);
  BigReal rhs = inv.kind == InvariantKind::G
                    ? 4 * m.alpha() * m.complement()
                    : 4 * m.alpha() / (m.complement() * m.complement());
  return abs(lhs - rhs);
}

std::optional<Expr> registry_lookup(InvariantKind kind, const Rational& n) {
  if (n.get_den() != 1) return std::nullopt;
  const std::string label = invariant_name(kind, n);
  const auto& registry = closed_form_registry();
  auto it = registry.find(label);
  if (it == registry.end()) return std::nullopt;
  return it->second;
}

std::string invariant_name(InvariantKind kind, const Rational& n) {
  return std::string(kind == InvariantKind::G ? "G_" : "g_") + rational_to_string(n);
}

}  // namespace ramanujan

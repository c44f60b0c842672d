#pragma once

// Weber-Ramanujan class invariants G_n and g_n.

#include "ramanujan/algexpr.hpp"
#include "ramanujan/elliptic.hpp"

#include <optional>
#include <string>

namespace ramanujan {

enum class InvariantKind { G, g };

struct ClassInvariant {
  InvariantKind kind;
  Rational n;
  BigReal value;
  std::optional<Expr> closed_form;
};

/// G_n = 2^{-1/4} q^{-1/24} chi(q), q = e^{-pi sqrt n}. Evaluated through the
/// product (-q;q^2) and through f(q)/f(-q^2); throws InconsistencyError if
/// they differ by more than 10^-(digits-5).
ClassInvariant G_numeric(const Rational& n, const PrecisionContext& ctx);
/// g_n = 2^{-1/4} q^{-1/24} chi(-q), checked the same way via f(-q)/f(-q^2).
ClassInvariant g_numeric(const Rational& n, const PrecisionContext& ctx);
ClassInvariant class_invariant(InvariantKind kind, const Rational& n, const PrecisionContext& ctx);

/// Solves 1/sqrt(alpha) - sqrt(alpha) = 2 g^12 for the root in (0,1).
/// Requires g > 0.
Modulus alpha_from_g(const BigReal& g, const PrecisionContext& ctx);
/// Throws std::invalid_argument unless inv.kind == g.
Modulus alpha_from_g(const ClassInvariant& inv, const PrecisionContext& ctx);

/// |value^-24 - 4 alpha (1-alpha)| for G, |value^-24 - 4 alpha / (1-alpha)^2|
/// for g, with alpha = singular_alpha(n).
BigReal invariant_residual(const ClassInvariant& inv, const PrecisionContext& ctx);

/// Exact form when one is registered: G_1, g_1, g_4, g_8.
std::optional<Expr> registry_lookup(InvariantKind kind, const Rational& n);

/// "G_5", "g_4/9".
std::string invariant_name(InvariantKind kind, const Rational& n);

}  // namespace ramanujan

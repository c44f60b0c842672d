#pragma once

// What each registered closed form is supposed to equal, and the checks that
// compare it against direct numerics and against the g_n / G_n formulas.

#include "ramanujan/algexpr.hpp"
#include "ramanujan/invariants.hpp"
#include "ramanujan/singular_cf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramanujan {

enum class TargetKind {
  alpha,           // alpha_n
  s1,              // S1(e^{-pi sqrt n})
  s2,              // S2(e^{-pi sqrt n})
  invariant,       // G_n or g_n
  g_radical,       // a radical built from the numeric g_n
  same_as,         // another registered expression
};

enum class GRadical { sqrt_g24_plus_1, sqrt_g8_plus_1, sqrt_g16_minus_g8_plus_1 };

/// Second route through the g_n / G_n formulas: the invariant of the given
/// kind at index `base`, fed through the chosen branch.
struct FormulaRoute {
  InvariantKind kind;
  Rational base;
  Branch branch;
};

struct ClosedFormTarget {
  std::string label;
  TargetKind kind;
  Rational n;
  InvariantKind invariant_kind = InvariantKind::g;
  GRadical radical = GRadical::sqrt_g24_plus_1;
  std::string partner;
  std::optional<FormulaRoute> formula;
};

/// One entry per fixture label, in fixture order.
const std::vector<ClosedFormTarget>& closed_form_targets();
/// Throws std::out_of_range for an unknown label.
const ClosedFormTarget& closed_form_target(std::string_view label);

/// Human-readable name of what the label denotes, e.g. "alpha_36" or
/// "S2(e^{-pi sqrt(5/9)})".
std::string describe_target(const ClosedFormTarget& t);

struct ClosedFormCheck {
  std::string label;
  BigReal exact;
  BigReal numeric;
  BigReal residual;
  std::optional<BigReal> formula_value;
  std::optional<BigReal> formula_residual;
  BigReal threshold;
  bool pass;
};

/// Numeric value of the quantity the target denotes (no closed form used).
BigReal target_numeric(const ClosedFormTarget& t, const PrecisionContext& ctx);
/// Value through the target's formula route, if it has one.
std::optional<BigReal> target_formula(const ClosedFormTarget& t, const PrecisionContext& ctx);

/// Relative differences against the closed form; threshold 10^-(digits-8)
/// unless given.
ClosedFormCheck check_closed_form(const ClosedFormTarget& t, const PrecisionContext& ctx,
                                  const std::optional<BigReal>& threshold = std::nullopt);
std::vector<ClosedFormCheck> check_all_closed_forms(const PrecisionContext& ctx);

}  // namespace ramanujan

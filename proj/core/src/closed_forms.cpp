#include "ramanujan/closed_forms.hpp"

#include "ramanujan/elliptic.hpp"

namespace ramanujan {

namespace {

ClosedFormTarget alpha_target(const char* label, Rational n,
                              std::optional<FormulaRoute> formula = std::nullopt) {
  return {label, TargetKind::alpha, std::move(n), InvariantKind::g, GRadical::sqrt_g24_plus_1,
          {}, formula};
}

ClosedFormTarget cf_target(const char* label, TargetKind kind, Rational n, FormulaRoute formula) {
  return {label, kind, std::move(n), InvariantKind::g, GRadical::sqrt_g24_plus_1, {}, formula};
}

ClosedFormTarget invariant_target(const char* label, InvariantKind kind, long n) {
  return {label, TargetKind::invariant, Rational(n), kind, GRadical::sqrt_g24_plus_1, {}, {}};
}

ClosedFormTarget radical_target(const char* label, GRadical radical) {
  return {label, TargetKind::g_radical, Rational(8), InvariantKind::g, radical, {}, {}};
}

ClosedFormTarget pair_target(const char* label, const char* partner) {
  return {label, TargetKind::same_as, Rational(0), InvariantKind::g, GRadical::sqrt_g24_plus_1,
          partner, {}};
}

constexpr auto kG = InvariantKind::G;
constexpr auto kg = InvariantKind::g;
constexpr auto kNine = Branch::nine_n;
constexpr auto kNinth = Branch::n_over_nine;

std::vector<ClosedFormTarget> build_targets() {
  std::vector<ClosedFormTarget> t = {
      alpha_target("alpha_1", 1),
      alpha_target("alpha_4", 4),
      invariant_target("G_1", kG, 1),
      invariant_target("g_1", kg, 1),
      invariant_target("g_4", kg, 4),
      invariant_target("g_8", kg, 8),
      alpha_target("alpha_36", 36, FormulaRoute{kg, 4, kNine}),
      alpha_target("alpha_4_9", Rational(4, 9), FormulaRoute{kg, 4, kNinth}),
      alpha_target("alpha_36_unreduced", 36, FormulaRoute{kg, 4, kNine}),
      alpha_target("alpha_4_9_unreduced", Rational(4, 9), FormulaRoute{kg, 4, kNinth}),
      pair_target("three_minus_two_sqrt2", "sqrt2_minus_1_squared"),
      pair_target("sqrt2_minus_1_squared", "three_minus_two_sqrt2"),
      radical_target("g8_sqrt_g24_plus_1", GRadical::sqrt_g24_plus_1),
      radical_target("g8_sqrt_g8_plus_1", GRadical::sqrt_g8_plus_1),
      radical_target("g8_sqrt_g16_minus_g8_plus_1", GRadical::sqrt_g16_minus_g8_plus_1),
      alpha_target("alpha_72", 72, FormulaRoute{kg, 8, kNine}),
      alpha_target("alpha_8_9", Rational(8, 9), FormulaRoute{kg, 8, kNinth}),
      alpha_target("alpha_72_unreduced", 72, FormulaRoute{kg, 8, kNine}),
      alpha_target("alpha_8_9_unreduced", Rational(8, 9), FormulaRoute{kg, 8, kNinth}),
      pair_target("denest_r_lhs", "denest_r_rhs"),
      pair_target("denest_r_rhs", "denest_r_lhs"),
      pair_target("denest_s_lhs", "denest_s_rhs"),
      pair_target("denest_s_rhs", "denest_s_lhs"),
      cf_target("S1_6", TargetKind::s1, 36, {kg, 4, kNine}),
      cf_target("S1_2_3", TargetKind::s1, Rational(4, 9), {kg, 4, kNinth}),
      cf_target("S1_6sqrt2", TargetKind::s1, 72, {kg, 8, kNine}),
      cf_target("S1_2sqrt2_3", TargetKind::s1, Rational(8, 9), {kg, 8, kNinth}),
      cf_target("S2_3sqrt5", TargetKind::s2, 45, {kG, 5, kNine}),
      cf_target("S2_sqrt5_3", TargetKind::s2, Rational(5, 9), {kG, 5, kNinth}),
      cf_target("S2_3sqrt7", TargetKind::s2, 63, {kG, 7, kNine}),
      cf_target("S2_sqrt7_3", TargetKind::s2, Rational(7, 9), {kG, 7, kNinth}),
  };
  for (const auto& target : t) closed_form(target.label);  // every target has a fixture entry
  if (t.size() != closed_form_labels().size())
    throw std::logic_error("closed-form fixture and target table differ in size");
  return t;
}

std::string nome_text(const Rational& n) {
  return "e^{-pi sqrt(" + rational_to_string(n) + ")}";
}

}  // namespace

const std::vector<ClosedFormTarget>& closed_form_targets() {
  static const std::vector<ClosedFormTarget> targets = build_targets();
  return targets;
}

const ClosedFormTarget& closed_form_target(std::string_view label) {
  for (const auto& t : closed_form_targets())
    if (t.label == label) return t;
  throw std::out_of_range("no closed-form target named " + std::string(label));
}

std::string describe_target(const ClosedFormTarget& t) {
  switch (t.kind) {
    case TargetKind::alpha: return "alpha_" + rational_to_string(t.n);
    case TargetKind::s1: return "S1(" + nome_text(t.n) + ")";
    case TargetKind::s2: return "S2(" + nome_text(t.n) + ")";
    case TargetKind::invariant: return invariant_name(t.invariant_kind, t.n);
    case TargetKind::g_radical:
      switch (t.radical) {
        case GRadical::sqrt_g24_plus_1: return "sqrt(g_8^24 + 1)";
        case GRadical::sqrt_g8_plus_1: return "sqrt(g_8^8 + 1)";
        case GRadical::sqrt_g16_minus_g8_plus_1: return "sqrt(g_8^16 - g_8^8 + 1)";
      }
      break;
    case TargetKind::same_as: return render(closed_form(t.partner));
  }
  return t.label;
}

BigReal target_numeric(const ClosedFormTarget& t, const PrecisionContext& ctx) {
  switch (t.kind) {
    case TargetKind::alpha: return singular_alpha(t.n, ctx).alpha();
    case TargetKind::s1: return s1_product(nome_from_n(t.n, ctx), ctx);
    case TargetKind::s2: return s2_product(nome_from_n(t.n, ctx), ctx);
    case TargetKind::invariant: return class_invariant(t.invariant_kind, t.n, ctx).value;
    case TargetKind::g_radical: {
      BigReal g8 = pow_int(g_numeric(t.n, ctx).value, 8);
      switch (t.radical) {
        case GRadical::sqrt_g24_plus_1: return sqrt(pow_int(g8, 3) + 1);
        case GRadical::sqrt_g8_plus_1: return sqrt(g8 + 1);
        case GRadical::sqrt_g16_minus_g8_plus_1: return sqrt(g8 * g8 - g8 + 1);
      }
      break;
    }
    case TargetKind::same_as: return eval_expr(closed_form(t.partner), ctx);
  }
  throw std::logic_error("unhandled closed-form target " + t.label);
}

std::optional<BigReal> target_formula(const ClosedFormTarget& t, const PrecisionContext& ctx) {
  if (!t.formula) return std::nullopt;
  const FormulaRoute& f = *t.formula;
  BigReal inv = class_invariant(f.kind, f.base, ctx).value;
  switch (t.kind) {
    case TargetKind::alpha: return alpha_from_g_branch(inv, f.branch, ctx);
    case TargetKind::s1: return s1_from_g(inv, f.branch, ctx);
    case TargetKind::s2: return s2_from_G(inv, f.branch, ctx);
    default: return std::nullopt;
  }
}

ClosedFormCheck check_closed_form(const ClosedFormTarget& t, const PrecisionContext& ctx,
                                  const std::optional<BigReal>& threshold) {
  BigReal limit = threshold ? *threshold : pow10(ctx, -(ctx.decimal_digits() - 8));
  BigReal exact = eval_expr(closed_form(t.label), ctx);
  BigReal numeric = target_numeric(t, ctx);
  BigReal residual = relative_difference(exact, numeric);
  bool pass = residual < limit;

  std::optional<BigReal> formula = target_formula(t, ctx);
  std::optional<BigReal> formula_residual;
  if (formula) {
    formula_residual = relative_difference(exact, *formula);
    pass = pass && *formula_residual < limit;
  }
  return {t.label, std::move(exact), std::move(numeric), std::move(residual), std::move(formula),
          std::move(formula_residual), std::move(limit), pass};
}

std::vector<ClosedFormCheck> check_all_closed_forms(const PrecisionContext& ctx) {
  std::vector<ClosedFormCheck> out;
  for (const auto& t : closed_form_targets()) out.push_back(check_closed_form(t, ctx));
  return out;
}

}  // namespace ramanujan

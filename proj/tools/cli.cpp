#include "cli.hpp"

#include "nome_text.hpp"
#include "ramanujan/closed_forms.hpp"
#include "ramanujan/elliptic.hpp"
#include "ramanujan/invariants.hpp"
#include "ramanujan/modeq.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/singular_cf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ramanujan::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultMaxTerms = 1 << 16;

struct Row {
  explicit Row(std::string l, std::optional<BigReal> v = std::nullopt,
               std::optional<BigReal> res = std::nullopt)
      : label(std::move(l)), value(std::move(v)), residual(std::move(res)) {}

  std::string label;
  std::optional<BigReal> value;
  std::optional<BigReal> residual;
  bool pass = true;
  // Extra named values shown next to the main one (direct evaluation, ...).
  std::vector<std::pair<std::string, BigReal>> references;
  std::string note;
};

struct Outcome {
  explicit Outcome(std::string c = {}) : command(std::move(c)) {}

  std::string command;
  Json inputs = Json::object();
  std::vector<Row> rows;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigReal identity_threshold(const PrecisionContext& ctx) { return default_identity_threshold(ctx); }

BigReal closed_form_threshold(const PrecisionContext& ctx) {
  return pow10(ctx, -(ctx.decimal_digits() - 8));
}

Row checked(std::string label, BigReal value, BigReal residual, const BigReal& threshold) {
  Row r(std::move(label), std::move(value), std::move(residual));
  r.pass = *r.residual < threshold;
  return r;
}

void describe_n(Json& inputs, const std::string& text, const Rational& n) {
  inputs["n"] = text;
  if (n.get_den() != 1) inputs["non_integer_n"] = true;
}

Rational positive_rational(const std::string& text) {
  Rational n = parse_rational(text);
  if (n <= 0) throw std::invalid_argument("n must be positive, got " + text);
  return n;
}

// ---------------------------------------------------------------------------
// subcommands

struct ThetaArgs {
  std::string fn;
  std::string q;
};

Outcome run_theta(const ThetaArgs& a, const PrecisionContext& ctx) {
  Outcome o("theta");
  o.inputs["fn"] = a.fn;
  o.inputs["q"] = a.q;
  Nome q = parse_nome(a.q, ctx);
  BigReal v(ctx);
  if (a.fn == "phi") v = phi(q, ctx);
  else if (a.fn == "psi") v = psi(q, ctx);
  else if (a.fn == "fneg") v = f_neg(q, ctx);
  else if (a.fn == "chi") v = chi(q, ctx);
  else v = f_pos(q, ctx);
  o.rows.emplace_back(a.fn + "(q)", std::move(v));
  return o;
}

struct AlphaArgs {
  std::string n;
  std::string q;
};

Outcome run_alpha(const AlphaArgs& a, const PrecisionContext& ctx) {
  Outcome o("alpha");
  std::optional<Nome> q;
  if (!a.n.empty()) {
    Rational n = positive_rational(a.n);
    describe_n(o.inputs, a.n, n);
    q = nome_from_n(n, ctx);
  } else {
    o.inputs["q"] = a.q;
    q = parse_nome(a.q, ctx);
  }
  Modulus m = alpha_from_nome(*q, ctx);
  BigReal gap = abs(m.alpha() + m.complement() - 1);
  Row alpha = checked("alpha", m.alpha(), std::move(gap),
                      pow10(ctx, -(ctx.decimal_digits() - 5)));
  alpha.note = "residual: |alpha + (1 - alpha) - 1| across the eta and theta routes";
  o.rows.push_back(std::move(alpha));
  o.rows.emplace_back("1-alpha", m.complement());
  return o;
}

struct InvariantArgs {
  std::string kind;
  std::string n;
};

Outcome run_invariant(const InvariantArgs& a, const PrecisionContext& ctx) {
  Outcome o("invariant");
  Rational n = positive_rational(a.n);
  o.inputs["kind"] = a.kind;
  describe_n(o.inputs, a.n, n);
  InvariantKind kind = a.kind == "G" ? InvariantKind::G : InvariantKind::g;
  ClassInvariant inv = class_invariant(kind, n, ctx);
  const BigReal limit = closed_form_threshold(ctx);

  Row row = checked(invariant_name(kind, n), inv.value, invariant_residual(inv, ctx), limit);
  row.note = kind == InvariantKind::G ? "residual: |G^-24 - 4 alpha (1-alpha)|"
                                      : "residual: |g^-24 - 4 alpha / (1-alpha)^2|";
  o.rows.push_back(std::move(row));
  if (inv.closed_form) {
    BigReal exact = eval_expr(*inv.closed_form, ctx);
    Row cf = checked("closed form", exact, relative_difference(exact, inv.value), limit);
    cf.note = render(*inv.closed_form);
    o.rows.push_back(std::move(cf));
  }
  return o;
}

struct CfArgs {
  std::string fn;
  std::string q;
  long terms = 0;
  std::string route = "cf";
};

Outcome run_cf(const CfArgs& a, const PrecisionContext& ctx) {
  Outcome o("cf");
  o.inputs["fn"] = a.fn;
  o.inputs["q"] = a.q;
  o.inputs["route"] = a.route;
  if (a.terms > 0) o.inputs["terms"] = a.terms;
  Nome q = parse_nome(a.q, ctx);
  const bool s1 = a.fn == "s1";
  BigReal product = s1 ? s1_product(q, ctx) : s2_product(q, ctx);
  const std::string name = s1 ? "S1(q)" : "S2(q)";

  BigReal cf(ctx);
  std::string depth_note;
  if (a.terms > 0) {
    cf = s1 ? s1_convergent(q, a.terms, ctx) : s2_convergent(q, a.terms, ctx);
    depth_note = "continued fraction cut at " + std::to_string(a.terms) + " terms";
  } else {
    CFState st = s1 ? s1_cf(q, kDefaultMaxTerms, ctx) : s2_cf(q, kDefaultMaxTerms, ctx);
    cf = st.convergent;
    depth_note = "continued fraction converged at " + std::to_string(st.terms_used) + " terms";
  }

  BigReal residual = relative_difference(cf, product);
  const bool cf_route = a.route == "cf";
  Row row = checked(name, cf_route ? cf : product, std::move(residual), identity_threshold(ctx));
  row.references.emplace_back(cf_route ? "product" : "continued fraction", cf_route ? product : cf);
  row.note = depth_note;
  o.rows.push_back(std::move(row));
  return o;
}

Outcome run_singular(const std::string& n_text, const PrecisionContext& ctx) {
  Outcome o("singular");
  Rational n = positive_rational(n_text);
  describe_n(o.inputs, n_text, n);
  const BigReal limit = closed_form_threshold(ctx);
  const std::string ns = rational_to_string(n);

  Modulus an = singular_alpha(n, ctx);
  ClassInvariant g = g_numeric(n, ctx);
  ClassInvariant G = G_numeric(n, ctx);
  o.rows.emplace_back("alpha_" + ns, an.alpha());

  BigReal a9n = singular_alpha(9 * n, ctx).alpha();
  BigReal a9n_formula = alpha_9n(g.value, ctx);
  Row r9 = checked("alpha_" + rational_to_string(9 * n), a9n,
                   relative_difference(a9n, a9n_formula), limit);
  r9.references.emplace_back("from g_" + ns, a9n_formula);
  o.rows.push_back(std::move(r9));

  BigReal an9 = singular_alpha(n / 9, ctx).alpha();
  BigReal an9_formula = alpha_n_over_9(g.value, ctx);
  Row rn9 = checked("alpha_" + rational_to_string(n / 9), an9,
                    relative_difference(an9, an9_formula), limit);
  rn9.references.emplace_back("from g_" + ns, an9_formula);
  o.rows.push_back(std::move(rn9));

  o.rows.push_back(checked(invariant_name(InvariantKind::g, n), g.value,
                           invariant_residual(g, ctx), limit));
  o.rows.push_back(checked(invariant_name(InvariantKind::G, n), G.value,
                           invariant_residual(G, ctx), limit));

  Nome q = nome_from_n(n, ctx);
  BigReal s1 = s1_product(q, ctx);
  BigReal from_alpha = s1_singular(n, ctx);
  Row rs1 = checked("S1(e^{-pi sqrt(" + ns + ")})", s1, relative_difference(s1, from_alpha), limit);
  rs1.references.emplace_back("alpha_n^(1/8)/sqrt(2)", from_alpha);
  o.rows.push_back(std::move(rs1));
  o.rows.emplace_back("S2(e^{-pi sqrt(" + ns + ")})", s2_product(q, ctx));
  return o;
}

Row identity_row(const ResidualReport& r) {
  Row row(r.id + " q=" + r.q.to_string(12));
  if (r.error.empty()) {
    row.value = r.lhs;
    row.residual = r.residual;
    row.references.emplace_back("rhs", r.rhs);
  } else {
    row.note = r.error;
  }
  row.pass = r.pass;
  return row;
}

void add_closed_form_rows(Outcome& o, const ClosedFormCheck& c, const std::string& label) {
  Row row(label, c.exact);
  BigReal worst = c.residual;
  if (c.formula_residual) worst = max(worst, *c.formula_residual);
  row.residual = std::move(worst);
  row.pass = c.pass;
  row.references.emplace_back("direct", c.numeric);
  if (c.formula_value) row.references.emplace_back("formula", *c.formula_value);
  row.note = render(closed_form(c.label));
  o.rows.push_back(std::move(row));
}

void add_factor_rows(Outcome& o, const FactorLimitReport& r) {
  for (const FactorReport& f : r.factors) {
    Row row(r.theorem + " q=" + r.q.to_string(6) + " " + f.name, f.exact_magnitude);
    row.pass = f.pass;
    std::ostringstream note;
    note << (f.expected_to_vanish ? "vanishing factor" : "rejected factor")
         << ", leading power " << f.expected_power.get_str() << ", observed " << std::fixed
         << std::setprecision(4) << f.observed_power;
    row.note = note.str();
    o.rows.push_back(std::move(row));
  }
}

struct FixtureCase {
  std::string id;
  std::string q;
  int digits;
  long threshold_exponent;
};

std::vector<FixtureCase> read_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture file " + path);
  std::vector<FixtureCase> cases;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    FixtureCase c;
    if (!(fields >> c.id)) continue;
    std::string extra;
    if (!(fields >> c.q >> c.digits >> c.threshold_exponent) || (fields >> extra))
      throw UsageError(path + ":" + std::to_string(line_no) +
                       ": expected '<id> <q> <digits> <threshold-exponent>'");
    cases.push_back(std::move(c));
  }
  if (cases.empty()) throw UsageError("fixture file " + path + " has no cases");
  return cases;
}

struct VerifyArgs {
  bool all = false;
  std::string identity;
  std::string q;
  std::string fixtures;
};

Outcome run_verify(const VerifyArgs& a, const PrecisionContext& ctx) {
  Outcome o("verify");
  if (!a.fixtures.empty()) {
    o.inputs["fixtures"] = a.fixtures;
    for (const FixtureCase& c : read_fixtures(a.fixtures)) {
      PrecisionContext case_ctx = make_context(c.digits, ctx.guard_digits());
      Nome q = parse_nome(c.q, case_ctx);
      o.rows.push_back(identity_row(
          verify_identity(c.id, q, case_ctx, pow10(case_ctx, -c.threshold_exponent))));
    }
    return o;
  }

  std::vector<std::string> ids = a.all || a.identity.empty() ? all_identity_ids()
                                                             : std::vector{a.identity};
  if (!a.identity.empty()) {
    find_identity(a.identity);
    o.inputs["identity"] = a.identity;
  }
  std::vector<Nome> grid;
  if (!a.q.empty()) {
    o.inputs["q"] = a.q;
    grid.push_back(parse_nome(a.q, ctx));
  } else {
    grid = canonical_grid(ctx);
  }
  for (const std::string& id : ids) {
    const Identity& identity = find_identity(id);
    for (const Nome& q : grid)
      if (q.value() > BigReal(ctx, identity.max_q))
        throw std::domain_error(id + " is only verified for q <= " +
                                rational_to_string(identity.max_q));
  }
  for (const ResidualReport& r : verify_suite(ids, grid, ctx)) o.rows.push_back(identity_row(r));

  if (a.all) {
    o.inputs["all"] = true;
    for (const ClosedFormCheck& c : check_all_closed_forms(ctx)) add_closed_form_rows(o, c, c.label);
    for (const char* theorem : {"T3.1", "T3.2", "T3.3", "T3.4"})
      for (const char* qs : {"0.01", "0.005"})
        add_factor_rows(o, factor_limit_check(theorem, Nome(BigReal::parse(ctx, qs), ctx), ctx));
  }
  return o;
}

Outcome run_closed_forms(bool all, const std::string& label, const PrecisionContext& ctx) {
  Outcome o("closed-forms");
  if (!label.empty()) {
    o.inputs["label"] = label;
    add_closed_form_rows(o, check_closed_form(closed_form_target(label), ctx), label);
    return o;
  }
  (void)all;
  o.inputs["all"] = true;
  for (const ClosedFormCheck& c : check_all_closed_forms(ctx)) add_closed_form_rows(o, c, c.label);
  return o;
}

Outcome run_table(const std::string& set, const PrecisionContext& ctx) {
  Outcome o("table");
  o.inputs["set"] = set;
  if (set == "singular-values") {
    for (const char* label : {"alpha_36", "alpha_4_9", "alpha_72", "alpha_8_9", "S1_6", "S1_2_3",
                              "S1_6sqrt2", "S1_2sqrt2_3", "S2_3sqrt5", "S2_sqrt5_3", "S2_3sqrt7",
                              "S2_sqrt7_3"}) {
      const ClosedFormTarget& t = closed_form_target(label);
      add_closed_form_rows(o, check_closed_form(t, ctx), describe_target(t));
    }
    return o;
  }
  const BigReal limit = closed_form_threshold(ctx);
  for (long n = 1; n <= 9; ++n) {
    for (InvariantKind kind : {InvariantKind::G, InvariantKind::g}) {
      ClassInvariant inv = class_invariant(kind, n, ctx);
      BigReal residual = invariant_residual(inv, ctx);
      Row row(invariant_name(kind, n), inv.value);
      if (inv.closed_form) {
        BigReal exact = eval_expr(*inv.closed_form, ctx);
        residual = max(residual, relative_difference(exact, inv.value));
        row.note = render(*inv.closed_form);
      }
      row.pass = residual < limit;
      row.residual = std::move(residual);
      o.rows.push_back(std::move(row));
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// output

std::string residual_text(const BigReal& r) { return r.is_zero() ? "0" : r.to_string(4); }

void emit_json(const Outcome& o, int digits, std::ostream& out) {
  Json results = Json::array();
  for (const Row& r : o.rows) {
    Json j;
    j["label"] = r.label;
    j["value"] = r.value ? Json(r.value->to_string(digits)) : Json(nullptr);
    j["residual"] = r.residual ? Json(residual_text(*r.residual)) : Json(nullptr);
    j["pass"] = r.pass;
    if (!r.references.empty()) {
      Json refs = Json::object();
      for (const auto& [name, v] : r.references) refs[name] = v.to_string(digits);
      j["references"] = std::move(refs);
    }
    if (!r.note.empty()) j["note"] = r.note;
    results.push_back(std::move(j));
  }
  Json doc;
  doc["command"] = o.command;
  doc["inputs"] = o.inputs;
  doc["digits"] = digits;
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

void emit_text(const Outcome& o, int digits, std::ostream& out) {
  size_t width = 0;
  for (const Row& r : o.rows) width = std::max(width, r.label.size());
  for (const Row& r : o.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.label << "  "
        << (r.value ? r.value->to_string(digits) : std::string("-"));
    if (r.residual) out << "  residual " << residual_text(*r.residual);
    if (r.residual || !r.pass) out << (r.pass ? "  PASS" : "  FAIL");
    out << '\n';
    for (const auto& [name, v] : r.references)
      out << std::setw(static_cast<int>(width)) << "" << "  " << name << ": " << v.to_string(digits)
          << '\n';
    if (!r.note.empty()) out << std::setw(static_cast<int>(width)) << "" << "  (" << r.note << ")\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision theta functions, singular moduli, class invariants and the "
               "Ramanujan-Selberg continued fractions.",
               "ramanujan"};
  app.require_subcommand(1);
  app.fallthrough();

  int digits = 50;
  bool json = false;
  app.add_option("--digits", digits, "Significant decimal digits (>= 10)")->capture_default_str();
  app.add_flag("--json", json, "Emit one JSON object instead of text");

  ThetaArgs theta;
  auto* theta_cmd = app.add_subcommand("theta", "Evaluate a theta function or q-product");
  theta_cmd->add_option("--fn", theta.fn)
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "fneg", "chi", "fpos"}));
  theta_cmd->add_option("--q", theta.q, "Nome: decimal or exp(-pi*sqrt(r))")->required();

  AlphaArgs alpha;
  auto* alpha_cmd = app.add_subcommand("alpha", "Modulus alpha(q) or singular modulus alpha_n");
  auto* alpha_n = alpha_cmd->add_option("--n", alpha.n, "Positive rational n");
  auto* alpha_q = alpha_cmd->add_option("--q", alpha.q, "Nome");
  alpha_n->excludes(alpha_q);
  alpha_cmd->require_option(1);

  InvariantArgs invariant;
  auto* inv_cmd = app.add_subcommand("invariant", "Class invariant G_n or g_n");
  inv_cmd->add_option("--kind", invariant.kind)->required()->check(CLI::IsMember({"G", "g"}));
  inv_cmd->add_option("--n", invariant.n)->required();

  CfArgs cf;
  auto* cf_cmd = app.add_subcommand("cf", "Ramanujan-Selberg continued fraction S1 or S2");
  cf_cmd->add_option("--fn", cf.fn)->required()->check(CLI::IsMember({"s1", "s2"}));
  cf_cmd->add_option("--q", cf.q)->required();
  cf_cmd->add_option("--terms", cf.terms, "Fixed depth (adaptive when omitted)")
      ->check(CLI::Range(1L, kDefaultMaxTerms));
  cf_cmd->add_option("--route", cf.route)->check(CLI::IsMember({"cf", "product"}));

  std::string singular_n;
  auto* singular_cmd =
      app.add_subcommand("singular", "alpha_n, alpha_9n, alpha_n/9, g_n, G_n, S1, S2 at one n");
  singular_cmd->add_option("--n", singular_n)->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify identities numerically");
  auto* v_all = verify_cmd->add_flag("--all", verify.all,
                                     "Every identity, closed form and factor check");
  auto* v_id = verify_cmd->add_option("--identity", verify.identity);
  auto* v_q = verify_cmd->add_option("--q", verify.q);
  auto* v_fix = verify_cmd->add_option("--fixtures", verify.fixtures,
                                       "Lines of '<id> <q> <digits> <threshold-exponent>'");
  v_all->excludes(v_id);
  v_fix->excludes(v_all)->excludes(v_id)->excludes(v_q);

  bool cf_all = false;
  std::string cf_label;
  auto* closed_cmd = app.add_subcommand("closed-forms", "Check registered closed forms");
  auto* c_all = closed_cmd->add_flag("--all", cf_all);
  auto* c_label = closed_cmd->add_option("--label", cf_label);
  c_all->excludes(c_label);

  std::string table_set;
  auto* table_cmd = app.add_subcommand("table", "Print a table of values");
  table_cmd->add_option("--set", table_set)
      ->required()
      ->check(CLI::IsMember({"singular-values", "invariants"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    PrecisionContext ctx = make_context(digits);
    Outcome o;
    if (*theta_cmd) o = run_theta(theta, ctx);
    else if (*alpha_cmd) o = run_alpha(alpha, ctx);
    else if (*inv_cmd) o = run_invariant(invariant, ctx);
    else if (*cf_cmd) o = run_cf(cf, ctx);
    else if (*singular_cmd) o = run_singular(singular_n, ctx);
    else if (*verify_cmd) o = run_verify(verify, ctx);
    else if (*closed_cmd) o = run_closed_forms(cf_all, cf_label, ctx);
    else o = run_table(table_set, ctx);

    if (json)
      emit_json(o, digits, out);
    else
      emit_text(o, digits, out);
    bool ok = std::all_of(o.rows.begin(), o.rows.end(), [](const Row& r) { return r.pass; });
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ramanujan::cli

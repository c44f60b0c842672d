#include "ramanujan/algexpr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace ramanujan {

using namespace expr_node;

// ---------------------------------------------------------------------------
// Construction

Expr Expr::integer(const mpz_class& v) {
  if (v < 0) throw std::invalid_argument("integer literal must be nonnegative; use neg()");
  return Expr(IntLit{v});
}

Expr Expr::rational(const Rational& v) {
  if (v < 0) throw std::invalid_argument("rational literal must be nonnegative; use neg()");
  Rational c = v;
  c.canonicalize();
  return Expr(RatLit{c});
}

Expr Expr::add(std::vector<Expr> terms) {
  if (terms.size() < 2) throw std::invalid_argument("Add needs at least two terms");
  return Expr(Add{std::move(terms)});
}

Expr Expr::mul(std::vector<Expr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("Mul needs at least two factors");
  return Expr(Mul{std::move(factors)});
}

Expr Expr::neg(Expr child) { return Expr(Neg{std::make_shared<const Expr>(std::move(child))}); }

Expr Expr::div(Expr num, Expr den) {
  return Expr(Div{std::make_shared<const Expr>(std::move(num)),
                  std::make_shared<const Expr>(std::move(den))});
}

Expr Expr::pow(Expr base, const Rational& exponent) {
  Rational c = exponent;
  c.canonicalize();
  return Expr(Pow{std::make_shared<const Expr>(std::move(base)), c});
}

Expr Expr::sqrt(Expr child) { return Expr(Sqrt{std::make_shared<const Expr>(std::move(child))}); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(*b.node_);
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, RatLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Add>) {
          return x.terms == y.terms;
        } else if constexpr (std::is_same_v<T, Mul>) {
          return x.factors == y.factors;
        } else if constexpr (std::is_same_v<T, Neg> || std::is_same_v<T, Sqrt>) {
          return *x.child == *y.child;
        } else if constexpr (std::is_same_v<T, Div>) {
          return *x.num == *y.num && *x.den == *y.den;
        } else {
          return x.exponent == y.exponent && *x.base == *y.base;
        }
      },
      *a.node_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::optional<Rational> fold_rational(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::optional<Rational> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return Rational(n.value);
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Add>) {
          Rational acc = 0;
          for (const auto& t : n.terms) {
            auto v = fold_rational(t);
            if (!v) return std::nullopt;
            acc += *v;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Mul>) {
          Rational acc = 1;
          for (const auto& t : n.factors) {
            auto v = fold_rational(t);
            if (!v) return std::nullopt;
            acc *= *v;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Neg>) {
          auto v = fold_rational(*n.child);
          if (!v) return std::nullopt;
          return Rational(-*v);
        } else if constexpr (std::is_same_v<T, Div>) {
          auto a = fold_rational(*n.num);
          auto b = fold_rational(*n.den);
          if (!a || !b || *b == 0) return std::nullopt;
          return Rational(*a / *b);
        } else if constexpr (std::is_same_v<T, Pow>) {
          auto b = fold_rational(*n.base);
          if (!b || n.exponent.get_den() != 1 || !n.exponent.get_num().fits_slong_p())
            return std::nullopt;
          long k = n.exponent.get_num().get_si();
          if (*b == 0 && k < 0) return std::nullopt;
          mpz_class num, den;
          unsigned long uk = static_cast<unsigned long>(k < 0 ? -k : k);
          mpz_pow_ui(num.get_mpz_t(), b->get_num_mpz_t(), uk);
          mpz_pow_ui(den.get_mpz_t(), b->get_den_mpz_t(), uk);
          Rational out = k < 0 ? Rational(den, num) : Rational(num, den);
          out.canonicalize();
          return out;
        } else {
          return std::nullopt;
        }
      },
      e.node());
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> terms;
    terms.push_back(term());
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(Expr::neg(term()));
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : Expr::add(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> run{unary(true)};
    for (;;) {
      if (accept('*')) {
        run.push_back(unary(true));
      } else if (peek() == '/') {
        ++pos_;
        Expr lhs = run.size() == 1 ? run.front() : Expr::mul(std::move(run));
        Expr rhs = unary(false);
        run = {Expr::div(std::move(lhs), std::move(rhs))};
      } else {
        break;
      }
    }
    return run.size() == 1 ? run.front() : Expr::mul(std::move(run));
  }

  Expr unary(bool allow_ratlit) {
    if (accept('-')) return Expr::neg(unary(allow_ratlit));
    return power(allow_ratlit);
  }

  Expr power(bool allow_ratlit) {
    Expr base = primary(allow_ratlit);
    if (!accept('^')) return base;
    size_t at = pos_;
    bool negative = accept('-');
    Expr exponent = power(false);
    auto value = fold_rational(exponent);
    if (!value) {
      pos_ = at;
      fail("exponent must be a rational constant");
    }
    return Expr::pow(std::move(base), negative ? Rational(-*value) : *value);
  }

  mpz_class integer_literal() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Expr primary(bool allow_ratlit) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer_literal();
      if (allow_ratlit) {
        size_t save = pos_;
        if (accept('/') && std::isdigit(static_cast<unsigned char>(peek()))) {
          size_t den_at = pos_;
          mpz_class den = integer_literal();
          if (peek() != '^') {
            if (den == 0) {
              pos_ = den_at;
              fail("zero denominator");
            }
            return Expr::rational(Rational(num, den));
          }
        }
        pos_ = save;
      }
      return Expr::integer(num);
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name != "sqrt") {
        pos_ = start;
        fail("unknown function '" + std::string(name) + "'");
      }
      if (!accept('(')) fail("expected '(' after sqrt");
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return Expr::sqrt(std::move(inner));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("expected operand, found '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool is_kind_add(const Expr& e) { return e.as<Add>() != nullptr; }
bool is_kind_mul_or_div(const Expr& e) { return e.as<Mul>() || e.as<Div>(); }

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string render_rational_exponent(const Rational& r) {
  if (r.get_den() == 1 && r >= 0) return r.get_num().get_str();
  return paren(r.get_str());
}

std::string render_node(const Expr& e);

std::string render_node(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return n.value.get_str();
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return n.value.get_num().get_str() + "/" + n.value.get_den().get_str();
        } else if constexpr (std::is_same_v<T, Add>) {
          std::string out;
          for (size_t i = 0; i < n.terms.size(); ++i) {
            const Expr& t = n.terms[i];
            if (const Neg* neg = t.as<Neg>(); neg && i > 0) {
              // "a - b*c" parses back as a + Neg(b*c), so only sums and
              // negations need grouping here.
              const Expr& c = *neg->child;
              out += " - " + (is_kind_add(c) || c.as<Neg>() ? paren(render_node(c)) : render_node(c));
              continue;
            }
            if (i > 0) out += " + ";
            out += is_kind_add(t) ? paren(render_node(t)) : render_node(t);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Mul>) {
          std::string out;
          for (size_t i = 0; i < n.factors.size(); ++i) {
            const Expr& f = n.factors[i];
            bool wrap = is_kind_add(f) || f.as<Mul>() || (i > 0 && f.as<Div>());
            if (i > 0) out += "*";
            out += wrap ? paren(render_node(f)) : render_node(f);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Neg>) {
          const Expr& c = *n.child;
          if (is_kind_add(c) || is_kind_mul_or_div(c)) return "-" + paren(render_node(c));
          return "-" + render_node(c);
        } else if constexpr (std::is_same_v<T, Div>) {
          const Expr& num = *n.num;
          const Expr& den = *n.den;
          // An integer-literal denominator would otherwise fuse with a
          // trailing integer in the numerator into a rational literal.
          bool fuse_risk = den.as<IntLit>() && (num.as<IntLit>() || num.as<Mul>() || num.as<Neg>());
          std::string lhs = (is_kind_add(num) || fuse_risk)
                                ? paren(render_node(num))
                                : render_node(num);
          bool wrap_den = is_kind_add(den) || is_kind_mul_or_div(den) || den.as<Neg>() ||
                          den.as<RatLit>();
          return lhs + "/" + (wrap_den ? paren(render_node(den)) : render_node(den));
        } else if constexpr (std::is_same_v<T, Pow>) {
          const Expr& b = *n.base;
          bool atomic = b.as<IntLit>() || b.as<Sqrt>();
          std::string base = atomic ? render_node(b) : paren(render_node(b));
          return base + "^" + render_rational_exponent(n.exponent);
        } else {
          return "sqrt(" + render_node(*n.child) + ")";
        }
      },
      e.node());
}

}  // namespace

std::string render(const Expr& e) { return render_node(e); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

BigReal eval_node(const Expr& e, const PrecisionContext& ctx) {
  return std::visit(
      [&](const auto& n) -> BigReal {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return BigReal(ctx, n.value);
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return BigReal(ctx, n.value);
        } else if constexpr (std::is_same_v<T, Add>) {
          BigReal acc(ctx);
          for (const auto& t : n.terms) acc += eval_node(t, ctx);
          return acc;
        } else if constexpr (std::is_same_v<T, Mul>) {
          BigReal acc(ctx, 1L);
          for (const auto& f : n.factors) acc *= eval_node(f, ctx);
          return acc;
        } else if constexpr (std::is_same_v<T, Neg>) {
          return -eval_node(*n.child, ctx);
        } else if constexpr (std::is_same_v<T, Div>) {
          BigReal den = eval_node(*n.den, ctx);
          if (den.is_zero()) throw EvalError("division by zero in " + render(e), e);
          return eval_node(*n.num, ctx) / den;
        } else if constexpr (std::is_same_v<T, Pow>) {
          BigReal base = eval_node(*n.base, ctx);
          const Rational& r = n.exponent;
          if (base.is_zero()) {
            if (r < 0) throw EvalError("zero raised to a negative power in " + render(e), e);
            return r == 0 ? BigReal(ctx, 1L) : BigReal(ctx);
          }
          if (r.get_den() == 1 && r.get_num().fits_slong_p())
            return pow_int(base, r.get_num().get_si());
          if (base.sign() > 0) return pow_rational(base, r, ctx);
          if (r.get_den() % 2 == 0)
            throw EvalError("even root of a negative value in " + render(e), e);
          BigReal magnitude = pow_rational(-base, r, ctx);
          return r.get_num() % 2 == 0 ? magnitude : -magnitude;
        } else {
          BigReal radicand = eval_node(*n.child, ctx);
          if (radicand.sign() < 0)
            throw EvalError("negative radicand in " + render(e) + " (value " +
                                radicand.to_string(10) + ")",
                            e);
          return sqrt(radicand);
        }
      },
      e.node());
}

}  // namespace

BigReal eval_expr(const Expr& e, const PrecisionContext& ctx) { return eval_node(e, ctx); }

bool equal_numeric(const Expr& e1, const Expr& e2, int digits) {
  PrecisionContext ctx = make_context(std::max(digits, PrecisionContext::kMinDecimalDigits) + 30);
  BigReal diff = abs(eval_expr(e1, ctx) - eval_expr(e2, ctx));
  return diff < pow10(ctx, -digits);
}

// ---------------------------------------------------------------------------
// Registry fixtures

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::pair<std::string, Expr>> parse_fixture(std::string_view text) {
  std::vector<std::pair<std::string, Expr>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto sep = line.find(":=");
    if (sep == std::string::npos)
      throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": missing ':='");
    std::string label = trim(std::string_view(line).substr(0, sep));
    if (label.empty())
      throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": empty label");
    for (const auto& [existing, _] : out)
      if (existing == label)
        throw std::invalid_argument("fixture line " + std::to_string(line_no) +
                                    ": duplicate label '" + label + "'");
    try {
      out.emplace_back(label, parse(std::string_view(line).substr(sep + 2)));
    } catch (const ParseError& err) {
      throw std::invalid_argument("fixture line " + std::to_string(line_no) + " (" + label +
                                  "): " + err.what());
    }
  }
  return out;
}

struct BuiltinRegistry {
  ExprRegistry map;
  std::vector<std::string> labels;

  BuiltinRegistry() {
    for (auto& [label, expr] : parse_fixture(closed_form_fixture_text())) {
      labels.push_back(label);
      map.emplace(label, std::move(expr));
    }
  }
};

const BuiltinRegistry& builtin() {
  static const BuiltinRegistry registry;
  return registry;
}

}  // namespace

ExprRegistry load_registry(std::string_view text) {
  ExprRegistry out;
  for (auto& [label, expr] : parse_fixture(text)) out.emplace(label, std::move(expr));
  return out;
}

const ExprRegistry& closed_form_registry() { return builtin().map; }

const std::vector<std::string>& closed_form_labels() { return builtin().labels; }

const Expr& closed_form(std::string_view label) {
  const auto& reg = closed_form_registry();
  auto it = reg.find(label);
  if (it == reg.end())
    throw std::out_of_range("unknown closed-form label '" + std::string(label) + "'");
  return it->second;
}

}  // namespace ramanujan

#pragma once

// Exact algebraic expression trees for nested-radical closed forms.
//
// Grammar (text form, also produced by render()):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?          right-associative
//   exponent:= '-'? power                       must fold to an exact rational
//   primary := INT | INT '/' INT | 'sqrt' '(' expr ')' | '(' expr ')'
//
// A literal INT '/' INT not followed by '^' is a rational literal; any other
// division is a Div node. Rationals are exact; only radicals are evaluated
// numerically.

#include "ramanujan/numerics.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ramanujan {

class Expr;

namespace expr_node {
struct IntLit { mpz_class value; };
struct RatLit { Rational value; };
struct Add { std::vector<Expr> terms; };
struct Mul { std::vector<Expr> factors; };
struct Neg { std::shared_ptr<const Expr> child; };
struct Div { std::shared_ptr<const Expr> num, den; };
struct Pow { std::shared_ptr<const Expr> base; Rational exponent; };
struct Sqrt { std::shared_ptr<const Expr> child; };
}  // namespace expr_node

/// Immutable expression tree with shared subtrees. Literals are nonnegative;
/// negation is always an explicit Neg node.
class Expr {
 public:
  using Node = std::variant<expr_node::IntLit, expr_node::RatLit, expr_node::Add,
                            expr_node::Mul, expr_node::Neg, expr_node::Div,
                            expr_node::Pow, expr_node::Sqrt>;

  static Expr integer(const mpz_class& v);
  static Expr integer(long v) { return integer(mpz_class(v)); }
  static Expr rational(const Rational& v);
  static Expr add(std::vector<Expr> terms);
  static Expr mul(std::vector<Expr> factors);
  static Expr neg(Expr child);
  static Expr div(Expr num, Expr den);
  static Expr pow(Expr base, const Rational& exponent);
  static Expr sqrt(Expr child);

  const Node& node() const { return *node_; }

  template <class T>
  const T* as() const { return std::get_if<T>(node_.get()); }

  /// Structural equality (same shape, same literals, same exponents).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, Expr subtree)
      : std::runtime_error(message), subtree_(std::move(subtree)) {}
  const Expr& subtree() const { return subtree_; }

 private:
  Expr subtree_;
};

Expr parse(std::string_view text);
std::string render(const Expr& e);

/// Evaluates at the context's working precision. Throws EvalError for a
/// negative radicand, an even root of a negative value or division by zero.
BigReal eval_expr(const Expr& e, const PrecisionContext& ctx);

/// True iff |e1 - e2| < 10^-digits when both are evaluated at digits + 30.
bool equal_numeric(const Expr& e1, const Expr& e2, int digits);

using ExprRegistry = std::map<std::string, Expr, std::less<>>;

/// Parses `<label> := <expression>` lines; '#' starts a comment.
ExprRegistry load_registry(std::string_view text);

/// The built-in closed-form fixture (compiled in from data/closed_forms.txt),
/// parsed once. Labels keep fixture order via closed_form_labels().
const ExprRegistry& closed_form_registry();
const std::vector<std::string>& closed_form_labels();
const Expr& closed_form(std::string_view label);
/// Raw fixture text.
std::string_view closed_form_fixture_text();

}  // namespace ramanujan

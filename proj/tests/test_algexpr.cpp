#include "ramanujan/algexpr.hpp"

#include <doctest.h>

using namespace ramanujan;
using namespace ramanujan::expr_node;

TEST_SUITE("algexpr") {

TEST_CASE("literals") {
  CHECK(parse("42") == Expr::integer(42));
  CHECK(parse("3/4") == Expr::rational(Rational(3, 4)));
  CHECK(parse("6/8") == Expr::rational(Rational(3, 4)));
  CHECK(parse("-5") == Expr::neg(Expr::integer(5)));
}

TEST_CASE("an integer over an integer power is a division") {
  Expr e = parse("1/2^3");
  REQUIRE(e.as<Div>());
  CHECK(*e.as<Div>()->den == Expr::pow(Expr::integer(2), 3));
}

TEST_CASE("precedence") {
  CHECK(parse("1 + 2*3") ==
        Expr::add({Expr::integer(1), Expr::mul({Expr::integer(2), Expr::integer(3)})}));
  CHECK(parse("-2^2") == Expr::neg(Expr::pow(Expr::integer(2), 2)));
  CHECK(parse("2^3^2") == Expr::pow(Expr::integer(2), 9));
  Expr quotient = parse("sqrt(2)/2/3");
  REQUIRE(quotient.as<Div>());
  CHECK(quotient.as<Div>()->num->as<Div>() != nullptr);
}

TEST_CASE("exponents fold to exact rationals") {
  CHECK(parse("2^(1/8)") == Expr::pow(Expr::integer(2), Rational(1, 8)));
  CHECK(parse("2^(-1/8)") == Expr::pow(Expr::integer(2), Rational(-1, 8)));
  CHECK(parse("3^(1/2 + 1/4)") == Expr::pow(Expr::integer(3), Rational(3, 4)));
  CHECK_THROWS_AS(parse("2^sqrt(2)"), ParseError);
}

TEST_CASE("parse errors report their offset") {
  try {
    parse("2^^3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse("sqrt(2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse("cbrt(2)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse("1 2"), ParseError);
}

TEST_CASE("render and parse round-trip") {
  for (const char* text :
       {"17 - 12*sqrt(2)", "2^(1/8)*(sqrt(2) + 1)^(1/8)", "(sqrt(2) - 1)^4*(sqrt(3) - sqrt(2))^4",
        "1/sqrt(2)*((3 - sqrt(7))/sqrt(2))^(1/2)", "-(1 + 2)", "(1)/2", "2*3/4", "-(2*3)/4",
        "1/(2/3)", "sqrt((sqrt(5) + 3)/4) - sqrt((sqrt(5) - 1)/4)", "2^(-1/8)", "1 - (2 - 3)",
        "(2^3)^(1/2)", "3/4^2"}) {
    CAPTURE(text);
    Expr e = parse(text);
    CHECK(parse(render(e)) == e);
  }
  CHECK(render(parse("17 - 12*sqrt(2)")) == "17 - 12*sqrt(2)");
}

TEST_CASE("evaluation") {
  PrecisionContext ctx = make_context(50);
  BigReal two(ctx, 2L);
  CHECK(abs(eval_expr(parse("17 - 12*sqrt(2)"), ctx) - (17 - 12 * sqrt(two))) < pow10(ctx, -55));
  CHECK(eval_expr(parse("3/4 + 1/4"), ctx) == 1);
  CHECK(eval_expr(parse("(-8)^(1/3)"), ctx) == -2);
  CHECK(eval_expr(parse("2^(-2)"), ctx) == BigReal(ctx, Rational(1, 4)));
}

TEST_CASE("evaluation errors name the subtree") {
  PrecisionContext ctx = make_context(20);
  try {
    eval_expr(parse("1 + sqrt(1 - 2)"), ctx);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.subtree() == parse("sqrt(1 - 2)"));
  }
  CHECK_THROWS_AS(eval_expr(parse("(1 - 2)^(1/2)"), ctx), EvalError);
  CHECK_THROWS_AS(eval_expr(parse("1/(2 - 2)"), ctx), EvalError);
  CHECK_THROWS_AS(eval_expr(parse("0^(-1)"), ctx), EvalError);
}

TEST_CASE("numeric equality") {
  CHECK(equal_numeric(parse("3 - 2*sqrt(2)"), parse("(sqrt(2) - 1)^2"), 60));
  CHECK(equal_numeric(parse("5 + 4*sqrt(2) - sqrt(56 + 40*sqrt(2))"),
                      parse("(sqrt((sqrt(2) + 2)/2) - sqrt(sqrt(2)/2))^4"), 60));
  CHECK_FALSE(equal_numeric(parse("sqrt(2)"), parse("1414213562373095/1000000000000000"), 30));
}

TEST_CASE("registry text") {
  ExprRegistry r = load_registry("# comment\na := 1/2\nb := sqrt(2)  # trailing\n\n");
  CHECK(r.size() == 2);
  CHECK(r.at("a") == Expr::rational(Rational(1, 2)));
  CHECK_THROWS_AS(load_registry("a := 1\na := 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_registry("a = 1\n"), std::invalid_argument);
  CHECK_THROWS(load_registry("a := 2^^3\n"));
}

TEST_CASE("built-in closed forms") {
  const auto& labels = closed_form_labels();
  REQUIRE(labels.size() == closed_form_registry().size());
  CHECK(labels.front() == "alpha_1");
  CHECK(closed_form("g_4") == parse("2^(1/8)"));
  CHECK_THROWS_AS(closed_form("alpha_13"), std::out_of_range);
  CHECK(closed_form_fixture_text().find("alpha_72 :=") != std::string_view::npos);
}

}

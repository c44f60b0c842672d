#include "frozen_values.hpp"
#include "oracles.hpp"
#include "ramanujan/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace ramanujan;

TEST_SUITE("numerics") {

TEST_CASE("context precision follows digits plus guard") {
  PrecisionContext ctx = make_context(50);
  CHECK(ctx.decimal_digits() == 50);
  CHECK(ctx.guard_digits() == PrecisionContext::kDefaultGuardDigits);
  CHECK(ctx.working_precision() ==
        static_cast<mpfr_prec_t>(std::ceil(65 * std::log2(10.0))));
  PrecisionContext up = ctx.escalated(20);
  CHECK(up.decimal_digits() == 70);
  CHECK(up.working_precision() > ctx.working_precision());
}

TEST_CASE("context rejects too few digits") {
  CHECK_THROWS_AS(make_context(9), std::invalid_argument);
  CHECK_THROWS_AS(make_context(20, 0), std::invalid_argument);
  CHECK_NOTHROW(make_context(10));
}

TEST_CASE("binary operations run at the wider precision") {
  PrecisionContext lo = make_context(20);
  PrecisionContext hi = make_context(60);
  BigReal a(lo, 1L);
  BigReal b(hi, 3L);
  BigReal c = a / b;
  CHECK(c.precision() == hi.working_precision());
}

TEST_CASE("pi and exp agree with independent series") {
  PrecisionContext ctx = make_context(70);
  BigReal p = pi(ctx);
  CHECK(abs(p - oracle::machin_pi(ctx)) < pow10(ctx, -75));
  CHECK(abs(p - oracle::frozen_value(ctx, oracle::frozen::pi)) < pow10(ctx, -75));
  BigReal e = exp(-p);
  CHECK(abs(e - oracle::taylor_exp(-p, ctx)) < pow10(ctx, -75));
  CHECK(abs(e - oracle::frozen_value(ctx, oracle::frozen::exp_minus_pi)) < pow10(ctx, -75));
}

TEST_CASE("sqrt and rational powers") {
  PrecisionContext ctx = make_context(60);
  BigReal two(ctx, 2L);
  CHECK(abs(sqrt(two) - oracle::newton_sqrt(two, ctx)) < pow10(ctx, -65));
  CHECK(abs(pow_rational(two, Rational(1, 8), ctx) -
            oracle::frozen_value(ctx, oracle::frozen::two_pow_eighth)) < pow10(ctx, -65));
  CHECK(abs(pow_rational(BigReal(ctx, 27L), Rational(-2, 3), ctx) - BigReal(ctx, Rational(1, 9))) <
        pow10(ctx, -65));
  CHECK_THROWS_AS(sqrt(BigReal(ctx, -1L)), std::domain_error);
  CHECK_THROWS_AS(pow_rational(BigReal(ctx, 0L), Rational(1, 2), ctx), std::domain_error);
  CHECK_THROWS_AS(pow_rational(BigReal(ctx, -8L), Rational(1, 3), ctx), std::domain_error);
}

TEST_CASE("decimal rendering") {
  PrecisionContext ctx = make_context(30);
  CHECK(BigReal(ctx, Rational(1, 2)).to_string(5) == "0.50000");
  CHECK(BigReal(ctx, -1234L).to_string(6) == "-1234.00");
  CHECK(BigReal(ctx, 0L).to_string(10) == "0");
  CHECK(BigReal::parse(ctx, "1e-20").to_string(3) == "1.00e-20");
  CHECK(BigReal::parse(ctx, "0.00012").to_string(2) == "0.00012");
  CHECK(BigReal(ctx, Rational(1, 3)).to_string(4) == BigReal(ctx, Rational(1, 3)).to_string(4));
}

TEST_CASE("decimal parsing") {
  PrecisionContext ctx = make_context(30);
  CHECK(BigReal::parse(ctx, "0.125") == BigReal(ctx, Rational(1, 8)));
  CHECK(BigReal::parse(ctx, "-2.5e-3") == BigReal(ctx, Rational(-1, 400)));
  CHECK_THROWS_AS(BigReal::parse(ctx, "0.1x"), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::parse(ctx, ""), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("4/9") == Rational(4, 9));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(rational_to_string(Rational(8, 9)) == "8/9");
}

TEST_CASE("residual helpers") {
  PrecisionContext ctx = make_context(20);
  BigReal a(ctx, 1000L);
  BigReal b(ctx, 1001L);
  CHECK(abs(relative_residual(a, b) - BigReal(ctx, Rational(1, 1001))) < pow10(ctx, -25));
  BigReal tiny(ctx, Rational(1, 1000000));
  CHECK(relative_residual(tiny, BigReal(ctx, 0L)) == tiny);
  CHECK(relative_difference(tiny, BigReal(ctx, 0L)) == 1);
  CHECK(relative_difference(BigReal(ctx, 0L), BigReal(ctx, 0L)).is_zero());
}

TEST_CASE("nome validation") {
  PrecisionContext ctx = make_context(30);
  CHECK_THROWS_AS(Nome(BigReal(ctx, 0L), ctx), std::domain_error);
  CHECK_THROWS_AS(Nome(BigReal(ctx, -1L), ctx), std::domain_error);
  CHECK_THROWS_AS(Nome(BigReal::parse(ctx, "0.95"), ctx), std::domain_error);
  CHECK_NOTHROW(Nome(BigReal::parse(ctx, "0.9"), ctx));
  CHECK_NOTHROW(Nome(BigReal::parse(ctx, "0.95"), BigReal::parse(ctx, "0.99")));
}

TEST_CASE("nomes built from n carry the label") {
  PrecisionContext ctx = make_context(40);
  Nome q = nome_from_n(1, ctx);
  CHECK(abs(q.value() - oracle::frozen_value(ctx, oracle::frozen::exp_minus_pi)) < pow10(ctx, -45));
  REQUIRE(q.n_label());
  CHECK(*q.n_label() == 1);
  Nome q3 = nome_from_n(2, ctx).power(3);
  REQUIRE(q3.n_label());
  CHECK(*q3.n_label() == 18);
  CHECK(abs(q3.value() - nome_from_n(18, ctx).value()) < pow10(ctx, -50));
  CHECK_FALSE(Nome(BigReal::parse(ctx, "0.1"), ctx).power(2).n_label());
  CHECK_THROWS_AS(nome_from_n(0, ctx), std::invalid_argument);
  CHECK_THROWS_AS(nome_from_n(Rational(1, 1000), ctx), std::domain_error);
}

TEST_CASE("tail target sits between output and working precision") {
  PrecisionContext ctx = make_context(50);
  BigReal t = tail_target(ctx);
  CHECK(t < pow10(ctx, -50));
  CHECK(t > pow10(ctx, -65));
}

}

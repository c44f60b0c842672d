#include "frozen_values.hpp"
#include "oracles.hpp"
#include "ramanujan/invariants.hpp"
#include "ramanujan/singular_cf.hpp"

#include <doctest.h>

using namespace ramanujan;

namespace {

const PrecisionContext& ctx() {
  static const PrecisionContext c = make_context(75);
  return c;
}

Nome nome(const char* q) { return Nome(BigReal::parse(ctx(), q), ctx()); }

bool close(const BigReal& a, const BigReal& b, long exponent = -72) {
  return relative_difference(a, b) < pow10(ctx(), exponent);
}

}  // namespace

TEST_SUITE("singular_cf") {

TEST_CASE("products against frozen values") {
  CHECK(close(s1_product(nome("0.1"), ctx()), oracle::frozen_value(ctx(), oracle::frozen::s1_0_1)));
  CHECK(close(s2_product(nome("0.1"), ctx()), oracle::frozen_value(ctx(), oracle::frozen::s2_0_1)));
  CHECK(close(s2_product(nome("0.5"), ctx()), oracle::frozen_value(ctx(), oracle::frozen::s2_0_5)));
  CHECK(close(s1_product(nome_from_n(1, ctx()), ctx()),
              oracle::frozen_value(ctx(), oracle::frozen::s1_exp_minus_pi)));
}

TEST_CASE("S1 at e^-pi is 2^(-5/8)") {
  BigReal expected = pow_rational(BigReal(ctx(), 2L), Rational(-5, 8), ctx());
  CHECK(close(s1_singular(1, ctx()), expected));
  CHECK(close(s1_product(nome_from_n(1, ctx()), ctx()), expected));
}

TEST_CASE("S2 at e^-pi is 1/sqrt 2") {
  CHECK(close(s2_product(nome_from_n(1, ctx()), ctx()), 1 / sqrt(BigReal(ctx(), 2L))));
}

TEST_CASE("fixed-depth convergents") {
  CHECK(relative_difference(s1_convergent(nome("0.1"), 40, ctx()),
                            s1_product(nome("0.1"), ctx())) < pow10(ctx(), -30));
  CHECK(relative_difference(s2_convergent(nome("0.01"), 20, ctx()),
                            s2_product(nome("0.01"), ctx())) < pow10(ctx(), -30));
  // one partial numerator: q^{1/8} / (1 + q)
  BigReal q = BigReal::parse(ctx(), "0.1");
  CHECK(close(s1_convergent(nome("0.1"), 1, ctx()),
              pow_rational(q, Rational(1, 8), ctx()) / (1 + q)));
  CHECK_THROWS_AS(s1_convergent(nome("0.1"), 0, ctx()), std::invalid_argument);
}

TEST_CASE("adaptive continued fraction") {
  for (const char* q : {"0.01", "0.05", "0.1"}) {
    CAPTURE(q);
    CFState s1 = s1_cf(nome(q), 65536, ctx());
    CFState s2 = s2_cf(nome(q), 65536, ctx());
    CHECK(close(s1.convergent, s1_product(nome(q), ctx()), -70));
    CHECK(close(s2.convergent, s2_product(nome(q), ctx()), -70));
    CHECK(s1.terms_used >= 4);
  }
  CHECK_THROWS_AS(s1_cf(nome("0.1"), 3, ctx()), std::invalid_argument);
  CHECK_THROWS_AS(s2_cf(nome("0.8"), 8, ctx()), std::runtime_error);
}

TEST_CASE("g formula radicals") {
  BigReal g = g_numeric(4, ctx()).value;
  GRadicals minus = g_radicals(g, Branch::nine_n, ctx());
  GRadicals plus = g_radicals(g, Branch::n_over_nine, ctx());
  CHECK(minus.outer == plus.outer);
  CHECK(minus.inner < plus.inner);
  CHECK(close(alpha_9n(g, ctx()) * alpha_n_over_9(g, ctx()), alpha_pair_product(g, ctx())));
  CHECK(close(alpha_9n(g, ctx()), singular_alpha(36, ctx()).alpha(), -68));
  CHECK(close(alpha_n_over_9(g, ctx()), singular_alpha(Rational(4, 9), ctx()).alpha(), -68));
  CHECK(alpha_from_g_branch(g, Branch::nine_n, ctx()) == alpha_9n(g, ctx()));
  CHECK_THROWS_AS(alpha_9n(BigReal(ctx(), 0L), ctx()), std::domain_error);
}

TEST_CASE("S1 from g and S2 from G") {
  BigReal g4 = g_numeric(4, ctx()).value;
  CHECK(close(s1_from_g(g4, Branch::nine_n, ctx()), s1_singular(36, ctx()), -68));
  CHECK(close(s1_from_g(g4, Branch::n_over_nine, ctx()), s1_singular(Rational(4, 9), ctx()), -68));

  BigReal G5 = G_numeric(5, ctx()).value;
  CHECK(close(s2_from_G(G5, Branch::nine_n, ctx()), s2_product(nome_from_n(45, ctx()), ctx()), -68));
  CHECK(close(s2_from_G(G5, Branch::n_over_nine, ctx()),
              s2_product(nome_from_n(Rational(5, 9), ctx()), ctx()), -68));
  CHECK_THROWS_AS(s2_from_G(BigReal::parse(ctx(), "0.99"), Branch::nine_n, ctx()),
                  std::domain_error);
}

TEST_CASE("S1 S2 ordering on (0,1)") {
  for (const char* q : {"0.01", "0.2", "0.6"}) {
    CAPTURE(q);
    CHECK(s1_product(nome(q), ctx()) < s2_product(nome(q), ctx()));
  }
}

}

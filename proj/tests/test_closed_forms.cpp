#include "ramanujan/closed_forms.hpp"

#include <doctest.h>

using namespace ramanujan;

TEST_SUITE("closed_forms") {

TEST_CASE("one target per fixture label") {
  const auto& targets = closed_form_targets();
  const auto& labels = closed_form_labels();
  REQUIRE(targets.size() == labels.size());
  for (size_t i = 0; i < labels.size(); ++i) CHECK(targets[i].label == labels[i]);
  CHECK_THROWS_AS(closed_form_target("alpha_99"), std::out_of_range);
}

TEST_CASE("descriptions") {
  CHECK(describe_target(closed_form_target("alpha_36")) == "alpha_36");
  CHECK(describe_target(closed_form_target("S2_sqrt5_3")) == "S2(e^{-pi sqrt(5/9)})");
}

TEST_CASE("every closed form holds at 60 digits") {
  PrecisionContext ctx = make_context(60);
  for (const ClosedFormCheck& c : check_all_closed_forms(ctx)) {
    CAPTURE(c.label);
    CHECK(c.pass);
    CHECK(c.residual < pow10(ctx, -45));
    if (c.formula_residual) CHECK(*c.formula_residual < pow10(ctx, -45));
  }
}

TEST_CASE("formula routes") {
  PrecisionContext ctx = make_context(50);
  for (const char* label : {"alpha_36", "alpha_8_9", "S1_6", "S2_3sqrt5", "S2_sqrt7_3"}) {
    CAPTURE(label);
    const ClosedFormTarget& t = closed_form_target(label);
    REQUIRE(t.formula);
    CHECK(target_formula(t, ctx));
  }
  CHECK_FALSE(target_formula(closed_form_target("alpha_1"), ctx));
}

TEST_CASE("a wrong closed form is caught") {
  PrecisionContext ctx = make_context(50);
  ClosedFormTarget t = closed_form_target("alpha_4");
  t.n = 9;
  CHECK_FALSE(check_closed_form(t, ctx).pass);
}

}

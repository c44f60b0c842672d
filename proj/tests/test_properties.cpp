#include "oracles.hpp"
#include "ramanujan/elliptic.hpp"
#include "ramanujan/modeq.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/singular_cf.hpp"

#include <doctest.h>

#include <random>

using namespace ramanujan;

namespace {

constexpr int kDigits = 50;

std::vector<std::string> random_nomes(unsigned seed, int count, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(static_cast<long>(lo * 1e6), static_cast<long>(hi * 1e6));
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(std::to_string(dist(rng)) + "e-6");
  return out;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("Jacobi triple product") {
  PrecisionContext ctx = make_context(kDigits);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 0.6);
  for (int i = 0; i < 20; ++i) {
    BigReal a(ctx, Rational(static_cast<long>(dist(rng) * 1e6), 1000000));
    BigReal b(ctx, Rational(static_cast<long>(dist(rng) * 1e6), 1000000));
    CAPTURE(a.to_string(8));
    CAPTURE(b.to_string(8));
    BigReal ab = a * b;
    Nome base(ab, ctx);
    BigReal product = qpochhammer(-a, base, ctx) * qpochhammer(-b, base, ctx) *
                      qpochhammer(ab, base, ctx);
    CHECK(relative_difference(f_general(a, b, ctx), product) < pow10(ctx, -45));
  }
}

TEST_CASE("phi is f(q,q) and psi is f(q,q^3)") {
  PrecisionContext ctx = make_context(kDigits);
  for (const auto& text : random_nomes(11, 20, 0.01, 0.8)) {
    CAPTURE(text);
    Nome q(BigReal::parse(ctx, text), ctx);
    const BigReal& x = q.value();
    CHECK(relative_difference(phi(q, ctx), f_general(x, x, ctx)) < pow10(ctx, -45));
    CHECK(relative_difference(psi(q, ctx), f_general(x, pow_int(x, 3), ctx)) < pow10(ctx, -45));
  }
}

TEST_CASE("modulus stays in (0,1) and is increasing in q") {
  PrecisionContext ctx = make_context(40);
  BigReal last(ctx);
  for (const char* text : {"0.001", "0.01", "0.1", "0.3", "0.5", "0.8"}) {
    CAPTURE(text);
    Modulus m = alpha_from_nome(Nome(BigReal::parse(ctx, text), ctx), ctx);
    CHECK(m.alpha() > last);
    last = m.alpha();
  }
}

TEST_CASE("identities hold at random nomes") {
  PrecisionContext ctx = make_context(kDigits);
  auto nomes = random_nomes(23, 6, 0.01, 0.49);
  std::vector<Nome> grid;
  for (const auto& t : nomes) grid.emplace_back(BigReal::parse(ctx, t), ctx);
  for (const auto& r : verify_suite(all_identity_ids(), grid, ctx)) {
    CAPTURE(r.id);
    CAPTURE(r.q.to_string(8));
    CHECK(r.pass);
  }
}

TEST_CASE("raising precision does not move the value") {
  PrecisionContext low = make_context(30);
  PrecisionContext high = low.escalated(40);
  for (const auto& text : random_nomes(31, 8, 0.01, 0.5)) {
    CAPTURE(text);
    BigReal a = s1_product(Nome(BigReal::parse(low, text), low), low);
    BigReal b = s1_product(Nome(BigReal::parse(high, text), high), high);
    CHECK(relative_difference(a, b) < pow10(low, -30));
  }
}

TEST_CASE("continued fraction matches the product at random nomes") {
  PrecisionContext ctx = make_context(40);
  for (const auto& text : random_nomes(43, 10, 0.001, 0.3)) {
    CAPTURE(text);
    Nome q(BigReal::parse(ctx, text), ctx);
    CHECK(relative_difference(s1_cf(q, 65536, ctx).convergent, s1_product(q, ctx)) <
          pow10(ctx, -35));
    CHECK(relative_difference(s2_cf(q, 65536, ctx).convergent, s2_product(q, ctx)) <
          pow10(ctx, -35));
  }
}

}

#include "ramanujan/modeq.hpp"

#include "ramanujan/elliptic.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/singular_cf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace ramanujan {

BigReal eval_eta_quotient(const EtaQuotient& e, const Nome& q, const PrecisionContext& ctx) {
  BigReal x(ctx);
  mpfr_set(x.get(), q.value().get(), MPFR_RNDN);
  BigReal value = e.q_exponent == 0 ? BigReal(ctx, 1L) : pow_rational(x, e.q_exponent, ctx);
  for (const EtaFactor& f : e.factors) {
    BigReal arg = pow_int(x, f.scale);
    BigReal fv = f.positive_argument ? f_general_series(arg, -(arg * arg), ctx).value
                                     : f_neg_series(arg, ctx).value;
    value *= pow_int(fv, f.power);
  }
  return value;
}

namespace {

// Lazily evaluated building blocks at one nome.
class Scope {
 public:
  Scope(const Nome& q, const PrecisionContext& ctx) : q_(q), ctx_(ctx), x_(ctx) {
    mpfr_set(x_.get(), q.value().get(), MPFR_RNDN);
  }

  const PrecisionContext& ctx() const { return ctx_; }
  const BigReal& x() const { return x_; }

  // f(-q^k)
  const BigReal& fneg(unsigned k) {
    auto it = fneg_.find(k);
    if (it == fneg_.end()) it = fneg_.emplace(k, f_neg_series(pow_int(x_, k), ctx_).value).first;
    return it->second;
  }

  // f(q^k) = f(q^k, -q^{2k}), summed directly.
  BigReal fpos(unsigned k) {
    BigReal a = pow_int(x_, k);
    return f_general_series(a, -(a * a), ctx_).value;
  }

  // alpha(q^k) and 1 - alpha(q^k)
  const Modulus& modulus(unsigned k) {
    auto it = moduli_.find(k);
    if (it == moduli_.end()) it = moduli_.emplace(k, alpha_from_nome(q_.power(k), ctx_)).first;
    return it->second;
  }
  const BigReal& alpha(unsigned k) { return modulus(k).alpha(); }
  const BigReal& comp(unsigned k) { return modulus(k).complement(); }

  // g evaluated at the nome q^3, the invariant paired with alpha(q^3).
  BigReal g_at_cube() {
    BigReal q3 = pow_int(x_, 3);
    return root(BigReal(ctx_, 2L), Rational(-1, 4)) * root(q3, Rational(-1, 24)) *
           qpochhammer_series(q3, q3 * q3, ctx_).value;
  }

  BigReal root(const BigReal& v, const Rational& r) const { return pow_rational(v, r, ctx_); }
  BigReal num(long v) const { return BigReal(ctx_, v); }
  BigReal eta(const EtaQuotient& e) const { return eval_eta_quotient(e, q_, ctx_); }

 private:
  const Nome& q_;
  const PrecisionContext& ctx_;
  BigReal x_;
  std::map<unsigned, BigReal> fneg_;
  std::map<unsigned, Modulus> moduli_;
};

struct Relation {
  const char* id;
  EtaQuotient P;
  EtaQuotient Q;
};

const std::vector<Relation>& relations() {
  static const std::vector<Relation> table = {
      {"T3.1",
       {Rational(-1, 2), {{1, 1}, {3, 1}, {4, -1}, {12, -1}}},
       {Rational(-3, 2), {{3, 1}, {9, 1}, {12, -1}, {36, -1}}}},
      {"T3.2",
       {Rational(1, 4), {{1, 1}, {12, 1}, {3, -1}, {4, -1}}},
       {Rational(3, 4), {{3, 1}, {36, 1}, {9, -1}, {12, -1}}}},
      {"T3.3", {Rational(-1, 8), {{1, 1}, {4, -1}}}, {Rational(-9, 8), {{9, 1}, {36, -1}}}},
      {"T3.4",
       {Rational(-5, 4), {{1, 1}, {9, 1}, {4, -1}, {36, -1}}},
       {Rational(-3, 4), {{3, 2}, {12, -2}}}},
  };
  return table;
}

const Relation& relation(std::string_view theorem) {
  for (const Relation& r : relations())
    if (theorem == r.id) return r;
  throw std::invalid_argument("unknown P-Q relation: " + std::string(theorem));
}

std::pair<BigReal, BigReal> pq(Scope& s, const char* id) {
  const Relation& r = relation(id);
  return {s.eta(r.P), s.eta(r.Q)};
}

IdentitySides l21a(Scope& s) {
  const BigReal& a = s.alpha(1);
  BigReal z = pow_int(phi_series(s.x(), s.ctx()).value, 2);
  return {s.fpos(1), sqrt(z) * s.root(s.num(2), Rational(-1, 6)) *
                         s.root(a * s.comp(1) / s.x(), Rational(1, 24))};
}

IdentitySides l21b(Scope& s) {
  const BigReal& a = s.alpha(1);
  BigReal z = pow_int(phi_series(s.x(), s.ctx()).value, 2);
  return {s.fneg(1), sqrt(z) * s.root(s.num(2), Rational(-1, 6)) *
                         s.root(a * pow_int(s.comp(1), 4) / s.x(), Rational(1, 24))};
}

IdentitySides l21c(Scope& s) {
  const BigReal& a = s.alpha(1);
  BigReal z = pow_int(phi_series(s.x(), s.ctx()).value, 2);
  return {s.fneg(4), sqrt(z) * s.root(s.num(2), Rational(-2, 3)) *
                         s.root(pow_int(a, 4) * s.comp(1) / pow_int(s.x(), 4), Rational(1, 24))};
}

IdentitySides l22(Scope& s) {
  return {s.fpos(1) / s.fneg(2), pow_int(s.fneg(2), 2) / (s.fneg(1) * s.fneg(4))};
}

IdentitySides l23(Scope& s) {
  const BigReal& a = s.alpha(1);
  const BigReal& b = s.alpha(3);
  const BigReal& c = s.alpha(3);
  const BigReal& d = s.alpha(9);
  const BigReal& a1 = s.comp(1);
  const BigReal& b1 = s.comp(3);
  const BigReal& c1 = s.comp(3);
  const BigReal& d1 = s.comp(9);
  BigReal K = s.root(256 * a * b * c * d * a1 * b1 * c1 * d1, Rational(1, 24));
  BigReal R = s.root(c * d * c1 * d1 / (a * b * a1 * b1), Rational(1, 24));
  auto sym = [](const BigReal& v, long k) { return pow_int(v, k) + pow_int(v, -k); };
  return {8 * sym(K, 3) * (sym(R, 3) + 1), sym(R, 9) + 10 * sym(R, 6) + 19 * sym(R, 3) + 36};
}

IdentitySides d3a(Scope& s) {
  return {s.root(s.alpha(1) * s.alpha(3), Rational(1, 4)) +
              s.root(s.comp(1) * s.comp(3), Rational(1, 4)),
          s.num(1)};
}

IdentitySides d3b(Scope& s) {
  const BigReal& a = s.alpha(1);
  const BigReal& b = s.alpha(3);
  const BigReal& a1 = s.comp(1);
  const BigReal& b1 = s.comp(3);
  return {sqrt(a * b1) + sqrt(b * a1), 2 * s.root(a * b * a1 * b1, Rational(1, 8))};
}

IdentitySides t31(Scope& s) {
  auto [P, Q] = pq(s, "T3.1");
  BigReal x = P / Q + Q / P;
  BigReal pqv = P * Q;
  return {(pqv + 16 / pqv) * (x + 1), pow_int(x, 3) - 2 * x * x - 8 * x - 8};
}

IdentitySides t32(Scope& s) {
  auto [P, Q] = pq(s, "T3.2");
  BigReal x = P / Q + Q / P;
  BigReal w = 1 / (P * Q) + P * Q;
  return {w * w, x * x * (w + 1) + 4};
}

IdentitySides t33(Scope& s) {
  auto [P, Q] = pq(s, "T3.3");
  BigReal h = P / Q + Q / P;
  BigReal X = pow_int(P * Q, 4);
  BigReal rhs = pow_int(h, 6) - 8 * pow_int(h, 5) + 4 * pow_int(h, 4) + 64 * pow_int(h, 3) -
                16 * h * h - 160 * h - 96;
  return {(X + 256 / X) * (h + 1), rhs};
}

IdentitySides t34(Scope& s) {
  auto [P, Q] = pq(s, "T3.4");
  BigReal x = P / Q + Q / P;
  return {pow_int(x, 3), Q * Q + 16 / (Q * Q)};
}

IdentitySides aux1(Scope& s) {
  BigReal X = s.fneg(3) / (s.root(s.x(), Rational(3, 8)) * s.fneg(12));
  BigReal X4 = pow_int(X, 4);
  return {X4 + 16 / X4, pow_int(s.fpos(3) / (s.root(s.x(), Rational(1, 8)) * s.fneg(6)), 12)};
}

IdentitySides e927(Scope& s) {
  const BigReal& an = s.alpha(3);
  BigReal root_an = sqrt(an);
  return {1 / root_an - root_an, 2 * pow_int(s.g_at_cube(), 12)};
}

IdentitySides prod(Scope& s) {
  return {s.alpha(9) * s.alpha(1), alpha_pair_product(s.g_at_cube(), s.ctx())};
}

IdentitySides ratio(Scope& s) {
  BigReal r = s.root(s.alpha(9) / s.alpha(1), Rational(1, 8));
  BigReal g8 = pow_int(s.g_at_cube(), 8);
  return {r + 1 / r, 2 * (g8 + sqrt(g8 * g8 - g8 + 1))};
}

using SidesFn = IdentitySides (*)(Scope&);

Identity make(const char* id, const char* statement, std::vector<std::string> bindings,
              SidesFn fn) {
  return {id, statement, std::move(bindings), Rational(1, 2),
          [fn](const Nome& q, const PrecisionContext& ctx) {
            Scope scope(q, ctx);
            return fn(scope);
          }};
}

const std::vector<std::string> kDegree3 = {"alpha = alpha(q)", "beta = alpha(q^3)"};
const std::vector<std::string> kTheta = {"alpha = alpha(q)", "z = phi(q)^2"};
const std::vector<std::string> kNinth = {"alpha_{n/9} = alpha(q)", "alpha_{9n} = alpha(q^9)",
                                         "g = g_n at the nome q^3"};

}  // namespace

const EtaQuotient& relation_P(std::string_view theorem) { return relation(theorem).P; }
const EtaQuotient& relation_Q(std::string_view theorem) { return relation(theorem).Q; }

const std::vector<Identity>& identity_registry() {
  static const std::vector<Identity> registry = {
      make("L2.1a", "f(q) = sqrt(z) 2^(-1/6) (alpha(1-alpha)/q)^(1/24)", kTheta, l21a),
      make("L2.1b", "f(-q) = sqrt(z) 2^(-1/6) (alpha(1-alpha)^4/q)^(1/24)", kTheta, l21b),
      make("L2.1c", "f(-q^4) = sqrt(z) 2^(-2/3) (alpha^4(1-alpha)/q^4)^(1/24)", kTheta, l21c),
      make("L2.2", "f(q)/f(-q^2) = f(-q^2)^2/(f(-q) f(-q^4))", {"f(q) = f(q, -q^2)"}, l22),
      make("L2.3",
           "8(K^3 + K^-3)(R^3 + R^-3 + 1) = (R^9 + R^-9) + 10(R^6 + R^-6) + 19(R^3 + R^-3) + 36",
           {"alpha = alpha(q)", "beta = gamma = alpha(q^3)", "delta = alpha(q^9)",
            "K = (256 alpha beta gamma delta (1-alpha)(1-beta)(1-gamma)(1-delta))^(1/24)",
            "R = (gamma delta (1-gamma)(1-delta) / (alpha beta (1-alpha)(1-beta)))^(1/24)"},
           l23),
      make("D3a", "(alpha beta)^(1/4) + ((1-alpha)(1-beta))^(1/4) = 1", kDegree3, d3a),
      make("D3b",
           "(alpha(1-beta))^(1/2) + (beta(1-alpha))^(1/2) = 2(alpha beta (1-alpha)(1-beta))^(1/8)",
           kDegree3, d3b),
      make("T3.1", "(PQ + 16/(PQ))(x + 1) = x^3 - 2x^2 - 8x - 8",
           {"P = f(-q)f(-q^3) / (q^(1/2) f(-q^4)f(-q^12))",
            "Q = f(-q^3)f(-q^9) / (q^(3/2) f(-q^12)f(-q^36))", "x = P/Q + Q/P"},
           t31),
      make("T3.2", "(1/(PQ) + PQ)^2 = x^2 (1/(PQ) + PQ + 1) + 4",
           {"P = q^(1/4) f(-q)f(-q^12) / (f(-q^3)f(-q^4))",
            "Q = q^(3/4) f(-q^3)f(-q^36) / (f(-q^9)f(-q^12))", "x = P/Q + Q/P"},
           t32),
      make("T3.3",
           "(P^4Q^4 + 256/(P^4Q^4))(h + 1) = h^6 - 8h^5 + 4h^4 + 64h^3 - 16h^2 - 160h - 96",
           {"P = f(-q) / (q^(1/8) f(-q^4))", "Q = f(-q^9) / (q^(9/8) f(-q^36))",
            "h = P/Q + Q/P"},
           t33),
      make("T3.4", "x^3 = Q^2 + 16/Q^2",
           {"P = f(-q)f(-q^9) / (q^(5/4) f(-q^4)f(-q^36))",
            "Q = f(-q^3)^2 / (q^(3/4) f(-q^12)^2)", "x = P/Q + Q/P"},
           t34),
      make("AUX1", "X^4 + 16/X^4 = (f(q^3) / (q^(1/8) f(-q^6)))^12",
           {"X = f(-q^3) / (q^(3/8) f(-q^12))"}, aux1),
      make("E9.27", "1/sqrt(alpha_n) - sqrt(alpha_n) = 2 g_n^12",
           {"alpha_n = alpha(q^3)", "g_n = g at the nome q^3"}, e927),
      make("PROD",
           "alpha_{9n} alpha_{n/9} = (sqrt(g^24+1) - g^12)^4 (sqrt(g^8+1) - g^4)^8", kNinth,
           prod),
      make("RATIO",
           "(alpha_{9n}/alpha_{n/9})^(1/8) + (alpha_{n/9}/alpha_{9n})^(1/8) = "
           "2(g^8 + sqrt(g^16 - g^8 + 1))",
           kNinth, ratio),
  };
  return registry;
}

const Identity& find_identity(std::string_view id) {
  for (const Identity& identity : identity_registry())
    if (identity.id == id) return identity;
  throw std::invalid_argument("unknown identity: " + std::string(id));
}

std::vector<std::string> all_identity_ids() {
  std::vector<std::string> ids;
  for (const Identity& identity : identity_registry()) ids.push_back(identity.id);
  return ids;
}

std::vector<Nome> canonical_grid(const PrecisionContext& ctx) {
  std::vector<Nome> grid;
  for (const char* q : {"0.05", "0.1", "0.2", "0.3", "0.4"})
    grid.emplace_back(BigReal::parse(ctx, q), ctx);
  return grid;
}

BigReal default_identity_threshold(const PrecisionContext& ctx) {
  return pow10(ctx, -(ctx.decimal_digits() - 10));
}

ResidualReport verify_identity(std::string_view id, const Nome& q, const PrecisionContext& ctx,
                               const std::optional<BigReal>& threshold) {
  const Identity& identity = find_identity(id);
  if (q.value() > BigReal(ctx, identity.max_q))
    throw std::domain_error(identity.id + " is verified only for q <= " +
                            rational_to_string(identity.max_q) + ", got " +
                            q.value().to_string(12));
  IdentitySides sides = identity.sides(q, ctx);
  BigReal residual = relative_residual(sides.lhs, sides.rhs);
  BigReal limit = threshold ? *threshold : default_identity_threshold(ctx);
  bool pass = residual < limit;
  return {identity.id,      q.value(),       ctx.decimal_digits(), std::move(sides.lhs),
          std::move(sides.rhs), std::move(residual), std::move(limit), pass, {}};
}

std::vector<ResidualReport> verify_suite(const std::vector<std::string>& ids,
                                         const std::vector<Nome>& grid,
                                         const PrecisionContext& ctx) {
  if (ids.empty()) throw std::invalid_argument("verify_suite: no identities given");
  if (grid.empty()) throw std::invalid_argument("verify_suite: no nomes given");

  const size_t total = ids.size() * grid.size();
  std::vector<std::optional<ResidualReport>> slots(total);
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (size_t i = next++; i < total; i = next++) {
      const std::string& id = ids[i / grid.size()];
      const Nome& q = grid[i % grid.size()];
      try {
        slots[i] = verify_identity(id, q, ctx);
      } catch (const std::exception& e) {
        BigReal nan(ctx), inf(ctx);
        mpfr_set_nan(nan.get());
        mpfr_set_inf(inf.get(), 1);
        slots[i] = ResidualReport{id,  q.value(), ctx.decimal_digits(), nan,
                                  nan, std::move(inf), default_identity_threshold(ctx),
                                  false, e.what()};
      }
    }
  };

  const size_t workers =
      std::min<size_t>(total, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<ResidualReport> reports;
  reports.reserve(total);
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

}  // namespace ramanujan

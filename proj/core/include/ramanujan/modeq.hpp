#pragma once

// Registry of modular identities with a residual-based verifier, and the
// small-q test that decides which polynomial factor of a relation vanishes.

#include "ramanujan/numerics.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramanujan {

/// f(+/-q^scale)^power.
struct EtaFactor {
  unsigned scale;
  int power;
  bool positive_argument = false;
};

/// q^{q_exponent} * prod f(+/-q^scale)^power; q_exponent is also the
/// quotient's leading order as q -> 0.
struct EtaQuotient {
  Rational q_exponent;
  std::vector<EtaFactor> factors;
};

BigReal eval_eta_quotient(const EtaQuotient& e, const Nome& q, const PrecisionContext& ctx);

struct IdentitySides {
  BigReal lhs;
  BigReal rhs;
};

struct Identity {
  std::string id;
  std::string statement;
  /// One "symbol = meaning" entry per symbol in the statement.
  std::vector<std::string> bindings;
  /// Verified for 0 < q <= max_q.
  Rational max_q;
  std::function<IdentitySides(const Nome&, const PrecisionContext&)> sides;
};

/// L2.1a-c, L2.2, L2.3, D3a, D3b, T3.1-T3.4, AUX1, E9.27, PROD, RATIO.
const std::vector<Identity>& identity_registry();
/// Throws std::invalid_argument for an unknown id.
const Identity& find_identity(std::string_view id);

/// P and Q of the four P-Q relations ("T3.1" ... "T3.4").
const EtaQuotient& relation_P(std::string_view theorem);
const EtaQuotient& relation_Q(std::string_view theorem);

struct ResidualReport {
  std::string id;
  BigReal q;
  int digits;
  BigReal lhs;
  BigReal rhs;
  BigReal residual;
  BigReal threshold;
  bool pass;
  /// Non-empty when evaluation threw; lhs and rhs are then NaN and residual +inf.
  std::string error;
};

/// 10^-(digits-10).
BigReal default_identity_threshold(const PrecisionContext& ctx);

/// Relative residual |lhs-rhs| / max(|lhs|,|rhs|,1). Throws
/// std::invalid_argument for an unknown id and std::domain_error when q lies
/// outside the identity's domain.
ResidualReport verify_identity(std::string_view id, const Nome& q, const PrecisionContext& ctx,
                               const std::optional<BigReal>& threshold = std::nullopt);

/// Every (id, q) pair, evaluated concurrently; reports come back id-major in
/// input order. A failing case is recorded in its report and does not stop
/// the rest. Throws std::invalid_argument if either list is empty.
std::vector<ResidualReport> verify_suite(const std::vector<std::string>& ids,
                                         const std::vector<Nome>& grid,
                                         const PrecisionContext& ctx);

std::vector<std::string> all_identity_ids();
/// q in {0.05, 0.1, 0.2, 0.3, 0.4}.
std::vector<Nome> canonical_grid(const PrecisionContext& ctx);

struct FactorReport {
  std::string name;
  /// The factor the relation keeps.
  bool expected_to_vanish;
  /// |sum of terms| / max |term| at the true P, Q.
  BigReal exact_magnitude;
  /// Exponent k with magnitude ~ q^k when P, Q are replaced by their leading
  /// powers of q; 0 means the factor stays bounded away from zero.
  Rational expected_power;
  /// log2(m(q) / m(q/2)) under the same replacement.
  double observed_power;
  bool pass;
};

struct FactorLimitReport {
  std::string theorem;
  BigReal q;
  std::vector<FactorReport> factors;
  bool pass;
};

/// Throws std::invalid_argument for an unknown theorem and std::domain_error
/// for q > 1/100.
FactorLimitReport factor_limit_check(std::string_view theorem, const Nome& q,
                                     const PrecisionContext& ctx);

}  // namespace ramanujan

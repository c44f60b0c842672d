#pragma once

// Complete elliptic integrals, 2F1(1/2,1/2;1;z) and singular moduli.

#include "ramanujan/numerics.hpp"

#include <optional>

namespace ramanujan {

/// alpha = k^2 together with its complement 1 - alpha. Both are stored
/// because each is computed by the route that keeps it relatively accurate:
/// alpha can be ~1e-11 (alpha_72) and 1 - alpha ~1e-4 (q = 0.4).
class Modulus {
 public:
  /// Throws std::domain_error unless 0 < alpha < 1 and 0 < complement < 1.
  Modulus(BigReal alpha, BigReal complement, std::optional<Rational> n_label = std::nullopt);

  const BigReal& alpha() const { return alpha_; }
  const BigReal& complement() const { return complement_; }
  const std::optional<Rational>& n_label() const { return n_label_; }

 private:
  BigReal alpha_;
  BigReal complement_;
  std::optional<Rational> n_label_;
};

/// 2F1(1/2,1/2;1;z) for 0 <= z < 1. Direct series for z <= 1/2, the
/// logarithmic expansion about z = 1 otherwise.
BigReal hyp2f1_half(const BigReal& z, const PrecisionContext& ctx);
/// Same function, given z and 1 - z separately so that z close to 1 loses no
/// accuracy to the subtraction.
BigReal hyp2f1_half(const BigReal& z, const BigReal& one_minus_z, const PrecisionContext& ctx);

/// K(k) = (pi/2) 2F1(1/2,1/2;1;k^2), 0 <= k < 1.
BigReal ellipK(const BigReal& k, const PrecisionContext& ctx);

/// alpha(q) = (f(q) / (sqrt(2) q^{1/8} f(-q^4)))^{-8}, checked against the
/// theta quotient 1 - alpha = (phi(-q)/phi(q))^4. Throws InconsistencyError
/// if the routes differ by more than 10^-(digits-5).
Modulus alpha_from_nome(const Nome& q, const PrecisionContext& ctx);

/// alpha_n = alpha(e^{-pi sqrt n}).
Modulus singular_alpha(const Rational& n, const PrecisionContext& ctx);

/// K'/K as a ratio of hypergeometric functions: F(1-alpha)/F(alpha).
BigReal period_ratio(const Modulus& m, const PrecisionContext& ctx);

/// |ratio(alpha(q^n)) / ratio(alpha(q)) - n|; small when alpha(q^n) has
/// degree n over alpha(q).
BigReal verify_degree(const Nome& q, unsigned n, const PrecisionContext& ctx);

}  // namespace ramanujan

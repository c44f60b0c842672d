#pragma once

// Singular moduli alpha_{9n}, alpha_{n/9} from the invariant g_n, and the
// Ramanujan-Selberg continued fractions S1 and S2.

#include "ramanujan/numerics.hpp"

namespace ramanujan {

/// Which root of the degree-9 relation: nine_n takes the inner "-" sign and
/// gives the smaller modulus alpha_{9n}; n_over_nine takes "+".
enum class Branch { nine_n, n_over_nine };

/// The three radicals of the g_n formula:
///   outer  = sqrt(g^24 + 1) - g^12
///   middle = sqrt(g^8 + 1) - g^4
///   inner  = sqrt((g^8 + 1 + r)/2) -/+ sqrt((g^8 - 1 + r)/2),  r = sqrt(g^16 - g^8 + 1)
/// Differences are formed as reciprocals of sums so nothing cancels.
struct GRadicals {
  BigReal outer;
  BigReal middle;
  BigReal inner;
};
GRadicals g_radicals(const BigReal& g, Branch branch, const PrecisionContext& ctx);

/// outer^2 middle^4 inner^8 with the "-" / "+" inner sign. Requires g > 0.
BigReal alpha_9n(const BigReal& g, const PrecisionContext& ctx);
BigReal alpha_n_over_9(const BigReal& g, const PrecisionContext& ctx);
BigReal alpha_from_g_branch(const BigReal& g, Branch branch, const PrecisionContext& ctx);
/// alpha_9n * alpha_n_over_9 = outer^4 middle^8.
BigReal alpha_pair_product(const BigReal& g, const PrecisionContext& ctx);

/// q^{1/8} (-q^2;q^2) / (-q;q^2).
BigReal s1_product(const Nome& q, const PrecisionContext& ctx);
/// q^{1/8} (-q^2;q^2) / (q;q^2).
BigReal s2_product(const Nome& q, const PrecisionContext& ctx);

struct CFState {
  long terms_used;
  BigReal convergent;
  BigReal prev_convergent;
};

/// q^{1/8} / (1 + a_1/(1 + a_2/(1 + ...))) cut after `depth` partial
/// numerators a_{2k-1} = x^{2k-1}, a_{2k} = x^k + x^{2k}, with x = q for S1
/// and x = -q for S2. Evaluated bottom-up.
BigReal s1_convergent(const Nome& q, long depth, const PrecisionContext& ctx);
BigReal s2_convergent(const Nome& q, long depth, const PrecisionContext& ctx);

/// Doubles the depth from 4 until two successive convergents agree to
/// tail_target(ctx). Throws std::invalid_argument for max_terms < 4 and
/// std::runtime_error if max_terms is reached first.
CFState s1_cf(const Nome& q, long max_terms, const PrecisionContext& ctx);
CFState s2_cf(const Nome& q, long max_terms, const PrecisionContext& ctx);

/// alpha_n^{1/8} / sqrt 2 = S1(e^{-pi sqrt n}).
BigReal s1_singular(const Rational& n, const PrecisionContext& ctx);
/// (1/sqrt 2) outer^{1/4} middle^{1/2} inner: S1 at e^{-3 pi sqrt n} for
/// nine_n, at e^{-pi sqrt(n)/3} for n_over_nine.
BigReal s1_from_g(const BigReal& g, Branch branch, const PrecisionContext& ctx);
/// (1/sqrt 2)(G^12 - sqrt(G^24-1))^{1/4}(G^4 - sqrt(G^8-1))^{1/2}
///   (sqrt((G^8+1+t)/2) -/+ sqrt((G^8-1+t)/2)),  t = sqrt(G^16 + G^8 + 1):
/// S2 at e^{-3 pi sqrt n} for nine_n, e^{-pi sqrt(n)/3} for n_over_nine.
/// Throws std::domain_error for G < 1.
BigReal s2_from_G(const BigReal& G, Branch branch, const PrecisionContext& ctx);

}  // namespace ramanujan

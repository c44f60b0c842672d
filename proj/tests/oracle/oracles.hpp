#pragma once

// Test-only reference algorithms. Each one reaches its value by a route
// unrelated to the library's own evaluator.

#include "ramanujan/numerics.hpp"

namespace oracle {

using ramanujan::BigReal;
using ramanujan::PrecisionContext;

/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
BigReal machin_pi(const PrecisionContext& ctx);
/// exp(x) by halving the argument, a Taylor series and repeated squaring.
BigReal taylor_exp(const BigReal& x, const PrecisionContext& ctx);
/// sqrt(x) by Newton iteration from a double seed.
BigReal newton_sqrt(const BigReal& x, const PrecisionContext& ctx);
/// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
BigReal agm_K(const BigReal& k, const PrecisionContext& ctx);
/// prod_{n<terms} (1 - a base^n), no tail estimate.
BigReal naive_qpochhammer(const BigReal& a, const BigReal& base, long terms,
                          const PrecisionContext& ctx);
/// sum_{|n|<=terms} a^{n(n+1)/2} b^{n(n-1)/2} term by term.
BigReal naive_f(const BigReal& a, const BigReal& b, long terms, const PrecisionContext& ctx);
/// Parses a frozen decimal string at the context's precision.
BigReal frozen_value(const PrecisionContext& ctx, const char* text);

}  // namespace oracle

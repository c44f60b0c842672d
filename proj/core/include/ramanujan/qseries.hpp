#pragma once

// Ramanujan's theta functions and infinite q-products with certified
// truncation. Every evaluator stops only once a geometric bound on the
// discarded tail falls below tail_target(ctx).

#include "ramanujan/numerics.hpp"

namespace ramanujan {

struct Truncation {
  long terms;
  BigReal tail_bound;
};

struct SeriesValue {
  BigReal value;
  Truncation truncation;
};

// Series evaluators at an arbitrary real argument |x| <= 9/10. Negative
// arguments are needed for phi(-q) and for the (-q;-q) product route.
SeriesValue phi_series(const BigReal& x, const PrecisionContext& ctx);
SeriesValue psi_series(const BigReal& x, const PrecisionContext& ctx);
/// Pentagonal-number series for f(-x) = (x;x)_inf.
SeriesValue f_neg_series(const BigReal& x, const PrecisionContext& ctx);
SeriesValue f_general_series(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);
/// (a;base)_inf for |base| <= 9/10. Throws std::domain_error if a factor is 0.
SeriesValue qpochhammer_series(const BigReal& a, const BigReal& base, const PrecisionContext& ctx);

/// phi(q) = sum q^{n^2}.
BigReal phi(const Nome& q, const PrecisionContext& ctx);
/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
BigReal psi(const Nome& q, const PrecisionContext& ctx);
/// f(-q) = sum (-1)^n q^{n(3n-1)/2} = (q;q)_inf.
BigReal f_neg(const Nome& q, const PrecisionContext& ctx);
/// Ramanujan's f(a,b) = sum a^{n(n+1)/2} b^{n(n-1)/2}; requires |ab| < 1.
BigReal f_general(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);
BigReal qpochhammer(const BigReal& a, const Nome& q, const PrecisionContext& ctx);
/// chi(q) = (-q;q^2)_inf.
BigReal chi(const Nome& q, const PrecisionContext& ctx);
/// f(q) through f(q) = f(-q^2)^3 / (f(-q) f(-q^4)).
BigReal f_pos(const Nome& q, const PrecisionContext& ctx);

}  // namespace ramanujan

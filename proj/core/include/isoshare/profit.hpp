#pragma once

#include "isoshare/cost_minimization.hpp"
#include "isoshare/production.hpp"
#include "isoshare/types.hpp"

namespace isoshare {

enum class ProfitRegime {
  unbounded_profit,  ///< gap > tol: profit grows without bound along the ray
  shutdown,          ///< gap < -tol: any positive production loses money
  zero_profit_ray,   ///< |gap| <= tol: maximal profit is exactly zero
};

const char* to_string(ProfitRegime regime);

/// Sign analysis of unit-output profit for a constant-returns technology with
/// the output price normalized to 1. By degree-1 homogeneity the supremum of
/// profit over the whole orthant is 0, +inf, or attained only at the origin,
/// determined entirely by the sign of this gap.
struct ZeroProfitReport {
  double gap = 0.0;  ///< 1 - minimal cost of producing one output unit
  ProfitRegime classification = ProfitRegime::zero_profit_ray;
  double tolerance = 1e-8;
  CostMinResult unit_cost_min;  ///< the q = 1 minimization backing the gap
};

/// Y(b) - w*L - r*K, output price normalized to 1.
double profit(const ProductionFunction& pf, const FactorPrices& prices, const Bundle& b);

ZeroProfitReport zero_profit_gap(const ProductionFunction& pf, const FactorPrices& prices,
                                 double tolerance = 1e-8);

/// The rental rate putting (w, r) on the zero-profit locus, found by bisection
/// in log r over [1e-9, 1e9]; unit cost is strictly increasing in r, so the
/// search is unconditionally convergent once bracketed. Throws NoRootError
/// when the bracket fails.
double zero_profit_rental(const ProductionFunction& pf, double wage);

struct BowleyCheck {
  double labour_share_of_output = 0.0;  ///< w*L / Y at the unit-output point
  Bundle minimizer;
  double rental = 0.0;  ///< zero-profit rental backing the check
};

/// Puts prices on the zero-profit locus and evaluates the labour share of
/// output at the unit-output cost minimizer. On the locus output equals cost,
/// so this coincides with the labour share of cost; along the maximizer ray
/// both w*L and Y scale identically, which makes the unit-output choice of
/// evaluation point immaterial.
BowleyCheck bowley_share_check(const ProductionFunction& pf, double wage);

}  // namespace isoshare

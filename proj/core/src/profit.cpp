#include "isoshare/profit.hpp"

#include <cmath>
#include <sstream>

namespace isoshare {
namespace {

constexpr double kRentalLo = 1e-9;
constexpr double kRentalHi = 1e9;

}  // namespace

const char* to_string(ProfitRegime regime) {
  switch (regime) {
    case ProfitRegime::unbounded_profit: return "unbounded_profit";
    case ProfitRegime::shutdown: return "shutdown";
    case ProfitRegime::zero_profit_ray: return "zero_profit_ray";
  }
  return "unknown";
}

double profit(const ProductionFunction& pf, const FactorPrices& prices, const Bundle& b) {
  require_positive(prices);
  return pf.evaluate(b) - bundle_cost(prices, b);
}

ZeroProfitReport zero_profit_gap(const ProductionFunction& pf, const FactorPrices& prices,
                                 double tolerance) {
  require_positive(prices);
  require_positive(tolerance, "tolerance");

  ZeroProfitReport report;
  report.tolerance = tolerance;
  report.unit_cost_min = minimize_cost(pf, prices, 1.0);
  report.gap = 1.0 - report.unit_cost_min.cost;
  if (report.gap > tolerance) {
    report.classification = ProfitRegime::unbounded_profit;
  } else if (report.gap < -tolerance) {
    report.classification = ProfitRegime::shutdown;
  } else {
    report.classification = ProfitRegime::zero_profit_ray;
  }
  return report;
}

double zero_profit_rental(const ProductionFunction& pf, double wage) {
  require_positive(wage, "wage");

  // gap(r) = 1 - unit_cost(w, r) is strictly decreasing in r.
  const auto gap_at = [&](double log_rental) {
    return zero_profit_gap(pf, {wage, std::exp(log_rental)}).gap;
  };
  // An endpoint where the unit-cost problem itself fails cannot bracket a root.
  const auto endpoint_gap = [&](double log_rental) {
    try {
      return gap_at(log_rental);
    } catch (const ComputationError& e) {
      std::ostringstream msg;
      msg << "zero-profit bracket endpoint r=" << std::exp(log_rental)
          << " failed for wage " << wage << ": " << e.what();
      throw NoRootError(msg.str());
    }
  };

  double x_lo = std::log(kRentalLo);
  double x_hi = std::log(kRentalHi);
  const double gap_lo = endpoint_gap(x_lo);
  const double gap_hi = endpoint_gap(x_hi);
  if (gap_lo < 0.0 || gap_hi > 0.0) {
    std::ostringstream msg;
    msg << "no zero-profit rental in [1e-9, 1e9] for wage " << wage
        << " (gap spans [" << gap_hi << ", " << gap_lo << "])";
    throw NoRootError(msg.str());
  }
  if (gap_lo == 0.0) return kRentalLo;
  if (gap_hi == 0.0) return kRentalHi;

  while (x_hi - x_lo > 1e-12) {
    const double x_mid = 0.5 * (x_lo + x_hi);
    if (gap_at(x_mid) >= 0.0) {
      x_lo = x_mid;
    } else {
      x_hi = x_mid;
    }
  }
  return std::exp(0.5 * (x_lo + x_hi));
}

BowleyCheck bowley_share_check(const ProductionFunction& pf, double wage) {
  const double rental = zero_profit_rental(pf, wage);
  const CostMinResult unit = minimize_cost(pf, {wage, rental}, 1.0);

  BowleyCheck check;
  check.rental = rental;
  check.minimizer = unit.minimizer;
  check.labour_share_of_output =
      wage * unit.minimizer.labour / pf.evaluate(unit.minimizer);
  return check;
}

}  // namespace isoshare

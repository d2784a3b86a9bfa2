#pragma once

// Test-only oracles. These stay independent of the library's solver path:
// the gradient oracle is plain central differences, and the minimizer oracle
// is a dense shrinking grid scan that never uses golden-section or parabolic
// steps. isoquant_solve_K is shared with the library on purpose; it is the
// level-set tracer both sides are defined against.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "isoshare/cost_minimization.hpp"
#include "isoshare/production.hpp"
#include "isoshare/types.hpp"

namespace oracles {

inline bool close_rel(double actual, double expected, double tol) {
  const double scale = std::max(std::abs(actual), std::abs(expected));
  return std::abs(actual - expected) <= tol * std::max(scale, 1e-300);
}

inline bool close_abs(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol;
}

inline isoshare::Gradient fd_gradient(const isoshare::ProductionFunction& pf,
                                      const isoshare::Bundle& b, double rel_step = 1e-6) {
  const double hk = std::min(rel_step * std::max(std::abs(b.capital), 1.0), 0.5 * b.capital);
  const double hl = std::min(rel_step * std::max(std::abs(b.labour), 1.0), 0.5 * b.labour);
  isoshare::Gradient g;
  g.d_capital = (pf.evaluate({b.capital + hk, b.labour}) -
                 pf.evaluate({b.capital - hk, b.labour})) /
                (2.0 * hk);
  g.d_labour = (pf.evaluate({b.capital, b.labour + hl}) -
                pf.evaluate({b.capital, b.labour - hl})) /
               (2.0 * hl);
  return g;
}

struct GridScanMin {
  isoshare::Bundle bundle;
  double cost = 0.0;
};

/// Dense log-grid scan over labour with iterative shrink around the incumbent.
/// Location resolution is noise-limited around 1e-7 relative, so comparisons
/// against it should use tolerances of 1e-6 on coordinates.
inline GridScanMin grid_scan_minimizer(const isoshare::ProductionFunction& pf,
                                       const isoshare::FactorPrices& prices, double q) {
  const auto cost_at = [&](double log_labour) {
    try {
      const double labour = std::exp(log_labour);
      const double capital = isoshare::isoquant_solve_K(pf, labour, q);
      return isoshare::bundle_cost(prices, {capital, labour});
    } catch (const isoshare::UnattainableError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  double lo = std::log(1e-6);
  double hi = std::log(1e6);
  double best_x = lo;
  double best_cost = std::numeric_limits<double>::infinity();
  constexpr int kPoints = 201;
  for (int round = 0; round < 10; ++round) {
    const double step = (hi - lo) / (kPoints - 1);
    for (int i = 0; i < kPoints; ++i) {
      const double x = lo + step * i;
      const double value = cost_at(x);
      if (value < best_cost) {
        best_cost = value;
        best_x = x;
      }
    }
    lo = best_x - step;
    hi = best_x + step;
  }

  GridScanMin out;
  out.bundle.labour = std::exp(best_x);
  out.bundle.capital = isoshare::isoquant_solve_K(pf, out.bundle.labour, q);
  out.cost = isoshare::bundle_cost(prices, out.bundle);
  return out;
}

/// Deterministic uniform doubles; avoids std::uniform_real_distribution so the
/// generated instances are identical on every standard library.
class SeededUniform {
public:
  explicit SeededUniform(std::uint64_t seed) : rng_(seed) {}

  double unit() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
  std::mt19937_64 rng_;
};

}  // namespace oracles

#include "isoshare/cost_minimization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace isoshare {
namespace {

constexpr double kCapitalLo = 1e-12;
constexpr double kCapitalHi = 1e12;
constexpr double kLabourLo = 1e-9;
constexpr double kLabourHi = 1e9;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Monotone solve of Y(K, L) = q in K at fixed L. Geometric bracket expansion
// from K = L, then safeguarded Newton in log K with bisection fallback. Runs
// the residual down to rounding level; the 1e-12 contract tolerance is the
// guaranteed bound, not the achieved one. The outer minimizer depends on that
// headroom: its parabolic refinement needs cost values with noise near eps.
double solve_capital(const ProductionFunction& pf, double labour, double output,
                     long long& evals) {
  const auto residual = [&](double k) {
    ++evals;
    return pf.evaluate({k, labour}) - output;
  };

  double k = std::clamp(labour, kCapitalLo, kCapitalHi);
  double f = residual(k);
  if (f == 0.0) return k;

  double k_lo = k, f_lo = f;  // want f(k_lo) < 0
  double k_hi = k, f_hi = f;  // want f(k_hi) > 0
  if (f < 0.0) {
    while (f_hi <= 0.0) {
      if (k_hi >= kCapitalHi) {
        std::ostringstream msg;
        msg << "output " << output << " is unattainable at labour " << labour
            << " for any capital in [1e-12, 1e12]";
        throw UnattainableError(msg.str());
      }
      k_lo = k_hi;
      f_lo = f_hi;
      k_hi = std::min(k_hi * 8.0, kCapitalHi);
      f_hi = residual(k_hi);
    }
    if (f_hi == 0.0) return k_hi;
  } else {
    while (f_lo >= 0.0) {
      if (k_lo <= kCapitalLo) {
        std::ostringstream msg;
        msg << "output " << output << " is exceeded at labour " << labour
            << " for every capital in [1e-12, 1e12]";
        throw UnattainableError(msg.str());
      }
      k_hi = k_lo;
      f_hi = f_lo;
      k_lo = std::max(k_lo / 8.0, kCapitalLo);
      f_lo = residual(k_lo);
    }
    if (f_lo == 0.0) return k_lo;
  }

  // Invariant: f(k_lo) < 0 < f(k_hi). Work on x = log K.
  double x_lo = std::log(k_lo);
  double x_hi = std::log(k_hi);
  const double f_tol = 2.0 * kEps * output;

  for (int it = 0; it < 200; ++it) {
    double x_new = 0.5 * (x_lo + x_hi);
    // Newton from the endpoint with the smaller residual, when usable.
    const bool from_lo = std::abs(f_lo) <= std::abs(f_hi);
    const double x_base = from_lo ? x_lo : x_hi;
    const double f_base = from_lo ? f_lo : f_hi;
    const double k_base = std::exp(x_base);
    const Bundle base{k_base, labour};
    if (pf.differentiable_at(base)) {
      const double slope = k_base * pf.gradient(base).d_capital;  // df/d(log K)
      if (std::isfinite(slope) && slope > 0.0) {
        const double candidate = x_base - f_base / slope;
        if (candidate > x_lo && candidate < x_hi) x_new = candidate;
      }
    }

    const double k_new = std::exp(x_new);
    const double f_new = residual(k_new);
    if (f_new == 0.0 || std::abs(f_new) <= f_tol) return k_new;
    if (f_new < 0.0) {
      x_lo = x_new;
      f_lo = f_new;
    } else {
      x_hi = x_new;
      f_hi = f_new;
    }
    if (x_hi - x_lo <= kEps * std::max(1.0, std::abs(x_hi))) break;
  }

  const double k_best = std::exp(std::abs(f_lo) <= std::abs(f_hi) ? x_lo : x_hi);
  const double achieved = std::abs(pf.evaluate({k_best, labour}) - output) / output;
  ++evals;
  if (achieved > 1e-12) {
    std::ostringstream msg;
    msg << "isoquant solve stalled at relative residual " << achieved << " (labour "
        << labour << ", output " << output << ")";
    throw std::logic_error(msg.str());
  }
  return k_best;
}

struct CostProfile {
  const ProductionFunction& pf;
  const FactorPrices& prices;
  double output;
  long long& evals;

  // w*L + r*K(L) on the isoquant, +inf where the output is unattainable.
  double operator()(double log_labour) const {
    const double labour = std::exp(log_labour);
    try {
      const double capital = solve_capital(pf, labour, output, evals);
      return bundle_cost(prices, {capital, labour});
    } catch (const UnattainableError&) {
      return kInf;
    }
  }
};

}  // namespace

double isoquant_solve_K(const ProductionFunction& pf, double labour, double output) {
  require_positive(labour, "labour");
  require_positive(output, "output");
  long long evals = 0;
  return solve_capital(pf, labour, output, evals);
}

CostMinResult minimize_cost(const ProductionFunction& pf, const FactorPrices& prices,
                            double output) {
  require_positive(prices);
  require_positive(output, "output");

  long long evals = 0;
  const CostProfile profile{pf, prices, output, evals};

  const double x_min = std::log(kLabourLo);
  const double x_max = std::log(kLabourHi);

  // Coarse scan to bracket the basin. Ties keep the smallest labour.
  constexpr int kScanPoints = 121;
  double best_value = kInf;
  int best_index = -1;
  std::vector<double> xs(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    xs[i] = x_min + (x_max - x_min) * static_cast<double>(i) / (kScanPoints - 1);
    const double value = profile(xs[i]);
    if (value < best_value) {
      best_value = value;
      best_index = i;
    }
  }
  if (best_index < 0) {
    std::ostringstream msg;
    msg << "output " << output << " is unattainable at every labour level in [1e-9, 1e9]";
    throw UnattainableError(msg.str());
  }
  if (best_index == 0 || best_index == kScanPoints - 1) {
    std::ostringstream msg;
    msg << "cost profile is monotone over labour in [1e-9, 1e9] (cheapest at the "
        << (best_index == 0 ? "lower" : "upper") << " end); no interior minimum";
    throw NoInteriorMinimumError(msg.str());
  }

  // Golden-section on the bracketing triple. Comparisons tolerate +inf values
  // from the unattainable side of the basin edge; ties drift left so that
  // numerically indistinguishable minima resolve to the smallest labour.
  double a = xs[best_index - 1];
  double c = xs[best_index + 1];
  constexpr double kGolden = 0.6180339887498949;
  double x1 = c - kGolden * (c - a);
  double x2 = a + kGolden * (c - a);
  double f1 = profile(x1);
  double f2 = profile(x2);
  while (c - a > 1e-8) {
    if (f2 < f1) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (c - a);
      f2 = profile(x2);
    } else {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kGolden * (c - a);
      f1 = profile(x1);
    }
  }
  double x_best = f1 <= f2 ? x1 : x2;
  double f_best = std::min(f1, f2);

  // Parabolic refinement. Golden section alone cannot place the argmin below
  // the sqrt(eps) comparison floor; vertex fits through near-machine-accurate
  // cost values push the location error to ~1e-9 relative.
  for (const double h : {1e-4, 2e-5, 2e-5}) {
    const double f_minus = profile(x_best - h);
    const double f_plus = profile(x_best + h);
    if (!std::isfinite(f_minus) || !std::isfinite(f_best) || !std::isfinite(f_plus)) break;
    const double curvature = f_minus - 2.0 * f_best + f_plus;
    if (!(curvature > 0.0)) break;
    double vertex = x_best + 0.5 * h * (f_minus - f_plus) / curvature;
    if (!std::isfinite(vertex)) break;
    vertex = std::clamp(vertex, x_best - h, x_best + h);
    x_best = vertex;
    f_best = profile(x_best);
  }

  CostMinResult result;
  const double labour = std::exp(x_best);
  const double capital = solve_capital(pf, labour, output, evals);
  result.minimizer = {capital, labour};
  result.cost = bundle_cost(prices, result.minimizer);
  result.labour_share = prices.wage * result.minimizer.labour / result.cost;
  result.feasibility_residual = (pf.evaluate(result.minimizer) - output) / output;
  ++evals;
  if (pf.differentiable_at(result.minimizer)) {
    const Gradient g = pf.gradient(result.minimizer);
    result.lagrange_lambda = prices.wage / g.d_labour;
    result.stationarity_residual =
        (prices.wage * g.d_capital - prices.rental * g.d_labour) /
        (prices.wage * g.d_capital + prices.rental * g.d_labour);
  }
  result.evaluations = evals;
  return result;
}

Bundle closed_form_cd_minimizer(const CobbDouglasParams& params,
                                const FactorPrices& prices, double output) {
  params.validate();
  require_positive(prices);
  require_positive(output, "output");

  const double beta = params.beta();
  const double labour = (output / params.scale) *
                        std::pow(prices.rental / prices.wage, params.alpha) *
                        std::pow(beta, -params.alpha);
  const double capital = labour * (prices.wage / prices.rental) * beta;

  const Bundle minimizer{capital, labour};
  const double y = params.scale * std::pow(capital, params.alpha) *
                   std::pow(labour, 1.0 - params.alpha);
  if (std::abs(y - output) / output > 1e-12) {
    std::ostringstream msg;
    msg << "closed-form minimizer failed its feasibility check: Y=" << y
        << " for requested output " << output;
    throw std::logic_error(msg.str());
  }
  return minimizer;
}

KktResiduals kkt_residuals(const ProductionFunction& pf, const FactorPrices& prices,
                           const Bundle& b, double output) {
  require_positive(prices);
  require_positive(output, "output");
  const double y = pf.evaluate(b);
  const Gradient g = pf.gradient(b);

  KktResiduals res;
  res.stationarity = (prices.wage * g.d_capital - prices.rental * g.d_labour) /
                     (prices.wage * g.d_capital + prices.rental * g.d_labour);
  res.feasibility = (y - output) / output;
  res.lambda = prices.wage / g.d_labour;
  return res;
}

}  // namespace isoshare

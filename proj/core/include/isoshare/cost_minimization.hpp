#pragma once

#include <optional>

#include "isoshare/production.hpp"
#include "isoshare/types.hpp"

namespace isoshare {

/// Result of minimizing factor cost rK + wL along the isoquant Y(K, L) = q.
///
/// lagrange_lambda and stationarity_residual are absent when the technology is
/// not differentiable at the minimizer (Leontief lands on its kink); the
/// minimizer itself is still returned.
struct CostMinResult {
  Bundle minimizer;
  double cost = 0.0;                 ///< w*L + r*K at the minimizer
  double labour_share = 0.0;         ///< w*L / cost, strictly inside (0, 1)
  double feasibility_residual = 0.0;  ///< (Y(minimizer) - q)/q
  std::optional<double> lagrange_lambda;        ///< w / (dY/dL) at the minimizer
  std::optional<double> stationarity_residual;  ///< (w*Y_K - r*Y_L)/(w*Y_K + r*Y_L)
  long long evaluations = 0;         ///< production-function evaluations spent
};

struct KktResiduals {
  double stationarity = 0.0;  ///< (w*Y_K - r*Y_L)/(w*Y_K + r*Y_L); 0 iff w/r = MRTS
  double feasibility = 0.0;   ///< (Y(b) - q)/q
  double lambda = 0.0;        ///< w / Y_L
};

/// Solves Y(K, L) = q for K at fixed labour. Bracketing by geometric expansion
/// inside K in [1e-12, 1e12], then safeguarded Newton/bisection in log K.
/// Throws UnattainableError when no bracket exists.
double isoquant_solve_K(const ProductionFunction& pf, double labour, double output);

/// Reduces to the one-dimensional profile g(L) = w*L + r*K(L) along the
/// isoquant and minimizes it in log L over [1e-9, 1e9] by golden-section
/// search with parabolic refinement. Derivative-free; gradients are used only
/// for the residual diagnostics. Throws NoInteriorMinimumError when g is
/// monotone over the full bracket and UnattainableError when no labour level
/// can reach the output.
CostMinResult minimize_cost(const ProductionFunction& pf, const FactorPrices& prices,
                            double output);

/// Closed-form Cobb-Douglas cost minimizer
///   L0 = (q/A) * (r/w)^alpha * beta^(-alpha),   K0 = L0 * (w/r) * beta,
/// with beta = alpha/(1-alpha). Feasibility is checked internally to 1e-12.
Bundle closed_form_cd_minimizer(const CobbDouglasParams& params,
                                const FactorPrices& prices, double output);

/// First-order diagnostics of the constrained problem at an arbitrary point.
KktResiduals kkt_residuals(const ProductionFunction& pf, const FactorPrices& prices,
                           const Bundle& b, double output);

}  // namespace isoshare

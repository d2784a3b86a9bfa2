#pragma once

#include <cstddef>
#include <vector>

#include "isoshare/production.hpp"
#include "isoshare/types.hpp"

namespace isoshare {

/// Price/output grids discretizing the "for all w, r, q" quantifier of the
/// share-constancy condition.
struct ScanConfig {
  std::vector<double> wage_grid;
  std::vector<double> rental_grid;
  std::vector<double> output_grid;
  double share_tolerance = 1e-6;    ///< solver-noise allowance for shares
  double verdict_tolerance = 1e-4;  ///< genuine model-deviation threshold

  void validate() const;

  /// Log-spaced 5x5 price grid on [0.2, 5]^2 and 3 outputs on [1, 10].
  static ScanConfig default_grid();
};

struct ShareScanEntry {
  double wage = 0.0;
  double rental = 0.0;
  double output = 0.0;
  Bundle minimizer;
  double labour_share = 0.0;
};

/// Labour shares of cost at the minimizer of every grid point, in
/// deterministic w-major / r / q order regardless of how the scan executed.
struct ShareScanReport {
  std::vector<ShareScanEntry> entries;
  double mean_share = 0.0;
  double max_deviation = 0.0;  ///< max |share - mean_share|
  double beta_hat = 0.0;       ///< (1 - mean_share) / mean_share
};

/// Outcome of the full three-part test: share constancy across prices and
/// output levels, constancy of the recovered scale, and the degree-1 Euler
/// identity on a bundle grid.
struct CharacterizationVerdict {
  bool is_cobb_douglas = false;
  double alpha_hat = 0.0;  ///< beta_hat / (beta_hat + 1)
  double scale_hat = 0.0;  ///< recovered A, mean of per-point estimates
  double beta_hat = 0.0;
  double share_max_deviation = 0.0;
  double scale_max_deviation = 0.0;  ///< max relative spread of the A estimates
  double euler_max_residual = 0.0;   ///< relative, normalized by Y
  bool euler_grid_differentiable = true;  ///< false if a probe hit a kink
  bool low_confidence = false;  ///< single price point cannot separate families
};

/// w*L / (w*L + r*K).
double labour_share_of_cost(const FactorPrices& prices, const Bundle& b);

/// (K - L*(w/r)*beta) / K: how far the point is from the fixed capital/labour
/// price-weighted ratio that holds at every Cobb-Douglas cost minimum.
double condition_b_residual(const FactorPrices& prices, const Bundle& b, double beta);

/// Cost-minimizes every grid point and aggregates the labour shares. Grid
/// points may be evaluated on `threads` workers; assembly order is always the
/// deterministic grid order. Unattainable points abort the scan with the
/// offending (w, r, q) identified in the error message.
ShareScanReport share_scan(const ProductionFunction& pf, const ScanConfig& cfg,
                           unsigned threads = 1);

/// (K*dY/dK) / (L*dY/dL); constant over bundles exactly for Cobb-Douglas.
double estimate_beta_pointwise(const ProductionFunction& pf, const Bundle& b);

/// Full verdict: share scan, scale recovery, and Euler grid check.
CharacterizationVerdict characterize(const ProductionFunction& pf, const ScanConfig& cfg,
                                     unsigned threads = 1);

/// Closed-form integral of dY/dL = Y/((beta+1) L), dY/dK = beta Y/((beta+1) K):
/// with alpha = beta/(beta+1), returns Y0 * (K/K0)^alpha * (L/L0)^(1-alpha).
double reconstruct_output(double beta, const Bundle& anchor_bundle, double anchor_output,
                          const Bundle& target);

}  // namespace isoshare

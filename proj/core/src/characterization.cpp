#include "isoshare/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "isoshare/cost_minimization.hpp"

namespace isoshare {
namespace {

// Fixed bundle grid probing the Euler identity (degree-1 homogeneity).
constexpr double kEulerGridLo = 0.1;
constexpr double kEulerGridHi = 10.0;
constexpr std::size_t kEulerGridSide = 5;

std::string grid_point_string(double w, double r, double q) {
  std::ostringstream out;
  out << "(w=" << w << ", r=" << r << ", q=" << q << ")";
  return out.str();
}

enum class ScanFailureKind { unattainable, no_interior_minimum, other };

struct ScanFailure {
  std::size_t index;
  ScanFailureKind kind;
  std::string message;
  std::exception_ptr original;
};

}  // namespace

void ScanConfig::validate() const {
  if (wage_grid.empty() || rental_grid.empty() || output_grid.empty()) {
    throw DomainError("scan grids must be non-empty");
  }
  for (double w : wage_grid) require_positive(w, "wage grid entry");
  for (double r : rental_grid) require_positive(r, "rental grid entry");
  for (double q : output_grid) require_positive(q, "output grid entry");
  require_positive(share_tolerance, "share_tolerance");
  require_positive(verdict_tolerance, "verdict_tolerance");
}

ScanConfig ScanConfig::default_grid() {
  ScanConfig cfg;
  cfg.wage_grid = log_spaced(0.2, 5.0, 5);
  cfg.rental_grid = log_spaced(0.2, 5.0, 5);
  cfg.output_grid = log_spaced(1.0, 10.0, 3);
  return cfg;
}

double labour_share_of_cost(const FactorPrices& prices, const Bundle& b) {
  require_positive(prices);
  require_interior(b);
  return prices.wage * b.labour / bundle_cost(prices, b);
}

double condition_b_residual(const FactorPrices& prices, const Bundle& b, double beta) {
  require_positive(prices);
  require_interior(b);
  require_positive(beta, "beta");
  return (b.capital - b.labour * (prices.wage / prices.rental) * beta) / b.capital;
}

ShareScanReport share_scan(const ProductionFunction& pf, const ScanConfig& cfg,
                           unsigned threads) {
  cfg.validate();

  const std::size_t n_w = cfg.wage_grid.size();
  const std::size_t n_r = cfg.rental_grid.size();
  const std::size_t n_q = cfg.output_grid.size();
  const std::size_t total = n_w * n_r * n_q;

  std::vector<ShareScanEntry> entries(total);
  std::vector<ScanFailure> failures;
  std::mutex failures_mutex;

  const auto run_point = [&](std::size_t index) {
    const std::size_t iw = index / (n_r * n_q);
    const std::size_t ir = (index / n_q) % n_r;
    const std::size_t iq = index % n_q;
    const double w = cfg.wage_grid[iw];
    const double r = cfg.rental_grid[ir];
    const double q = cfg.output_grid[iq];
    try {
      const CostMinResult res = minimize_cost(pf, {w, r}, q);
      entries[index] = {w, r, q, res.minimizer, res.labour_share};
    } catch (const UnattainableError& e) {
      std::lock_guard<std::mutex> lock(failures_mutex);
      failures.push_back({index, ScanFailureKind::unattainable, e.what(), nullptr});
    } catch (const NoInteriorMinimumError& e) {
      std::lock_guard<std::mutex> lock(failures_mutex);
      failures.push_back({index, ScanFailureKind::no_interior_minimum, e.what(), nullptr});
    } catch (...) {
      std::lock_guard<std::mutex> lock(failures_mutex);
      failures.push_back({index, ScanFailureKind::other, "", std::current_exception()});
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < total; i += workers) run_point(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  if (!failures.empty()) {
    // Deterministic regardless of worker interleaving: report the first grid
    // point in scan order.
    const auto worst = std::min_element(
        failures.begin(), failures.end(),
        [](const ScanFailure& a, const ScanFailure& b) { return a.index < b.index; });
    const std::size_t iw = worst->index / (n_r * n_q);
    const std::size_t ir = (worst->index / n_q) % n_r;
    const std::size_t iq = worst->index % n_q;
    const std::string where = grid_point_string(cfg.wage_grid[iw], cfg.rental_grid[ir],
                                                cfg.output_grid[iq]);
    switch (worst->kind) {
      case ScanFailureKind::unattainable:
        throw UnattainableError("share scan at grid point " + where + ": " +
                                worst->message);
      case ScanFailureKind::no_interior_minimum:
        throw NoInteriorMinimumError("share scan at grid point " + where + ": " +
                                     worst->message);
      case ScanFailureKind::other:
        std::rethrow_exception(worst->original);
    }
  }

  ShareScanReport report;
  report.entries = std::move(entries);
  double sum = 0.0;
  for (const ShareScanEntry& entry : report.entries) sum += entry.labour_share;
  report.mean_share = sum / static_cast<double>(total);
  for (const ShareScanEntry& entry : report.entries) {
    report.max_deviation =
        std::max(report.max_deviation, std::abs(entry.labour_share - report.mean_share));
  }
  report.beta_hat = (1.0 - report.mean_share) / report.mean_share;
  return report;
}

double estimate_beta_pointwise(const ProductionFunction& pf, const Bundle& b) {
  const Gradient g = pf.gradient(b);
  const double labour_term = b.labour * g.d_labour;
  if (!(labour_term > 0.0)) {
    std::ostringstream msg;
    msg << "L*dY/dL must be positive to estimate beta, got " << labour_term;
    throw DomainError(msg.str());
  }
  return b.capital * g.d_capital / labour_term;
}

CharacterizationVerdict characterize(const ProductionFunction& pf, const ScanConfig& cfg,
                                     unsigned threads) {
  const ShareScanReport scan = share_scan(pf, cfg, threads);

  CharacterizationVerdict verdict;
  verdict.beta_hat = scan.beta_hat;
  verdict.alpha_hat = scan.beta_hat / (scan.beta_hat + 1.0);
  verdict.share_max_deviation = scan.max_deviation;

  // Condition (1): relative Euler residual over the fixed bundle grid. A kink
  // anywhere on the grid already violates the differentiability hypothesis.
  const std::vector<double> axis = log_spaced(kEulerGridLo, kEulerGridHi, kEulerGridSide);
  for (double capital : axis) {
    for (double labour : axis) {
      const Bundle b{capital, labour};
      if (!pf.differentiable_at(b)) {
        verdict.euler_grid_differentiable = false;
        continue;
      }
      const double y = pf.evaluate(b);
      verdict.euler_max_residual =
          std::max(verdict.euler_max_residual, std::abs(euler_residual(pf, b)) / y);
    }
  }

  // The proof's "const x": per-point scale estimates from the scan minimizers.
  double scale_sum = 0.0;
  std::vector<double> scales;
  scales.reserve(scan.entries.size());
  for (const ShareScanEntry& entry : scan.entries) {
    const double denom = std::pow(entry.minimizer.capital, verdict.alpha_hat) *
                         std::pow(entry.minimizer.labour, 1.0 - verdict.alpha_hat);
    scales.push_back(entry.output / denom);
    scale_sum += scales.back();
  }
  verdict.scale_hat = scale_sum / static_cast<double>(scales.size());
  for (double s : scales) {
    verdict.scale_max_deviation = std::max(
        verdict.scale_max_deviation, std::abs(s - verdict.scale_hat) / verdict.scale_hat);
  }

  verdict.low_confidence = cfg.wage_grid.size() * cfg.rental_grid.size() == 1;
  verdict.is_cobb_douglas = verdict.euler_grid_differentiable &&
                            verdict.share_max_deviation <= cfg.verdict_tolerance &&
                            verdict.scale_max_deviation <= cfg.verdict_tolerance &&
                            verdict.euler_max_residual <= cfg.verdict_tolerance;
  return verdict;
}

double reconstruct_output(double beta, const Bundle& anchor_bundle, double anchor_output,
                          const Bundle& target) {
  require_positive(beta, "beta");
  require_interior(anchor_bundle);
  require_positive(anchor_output, "anchor output");
  require_interior(target);
  const double alpha = beta / (beta + 1.0);
  return anchor_output * std::pow(target.capital / anchor_bundle.capital, alpha) *
         std::pow(target.labour / anchor_bundle.labour, 1.0 - alpha);
}

}  // namespace isoshare

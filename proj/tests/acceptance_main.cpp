// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isoshare/characterization.hpp"
#include "isoshare/cost_minimization.hpp"
#include "isoshare/production.hpp"
#include "isoshare/profit.hpp"
#include "oracles.hpp"

#ifndef ISOSHARE_CLI_BIN
#error "ISOSHARE_CLI_BIN must point at the isoshare binary"
#endif

namespace {

using namespace isoshare;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Closed form vs derivative-free numeric minimizer, 100 seeded instances.
void criterion_1() {
  const auto start = Clock::now();
  oracles::SeededUniform rng(1234);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CobbDouglasParams params{rng.in(0.5, 4.0), rng.in(0.1, 0.9)};
    const FactorPrices prices{rng.in(0.2, 5.0), rng.in(0.2, 5.0)};
    const double q = rng.in(0.5, 20.0);
    const Bundle closed = closed_form_cd_minimizer(params, prices, q);
    const auto numeric = minimize_cost(CobbDouglas(params), prices, q);
    const double closed_cost = bundle_cost(prices, closed);
    worst = std::max(
        {worst, std::abs(numeric.minimizer.capital - closed.capital) / closed.capital,
         std::abs(numeric.minimizer.labour - closed.labour) / closed.labour,
         std::abs(numeric.cost - closed_cost) / closed_cost});
  }
  const double elapsed = seconds_since(start);
  report(1, worst <= 1e-8 && elapsed <= 5.0,
         "closed form vs numeric minimizer on 100 seeded instances: worst rel err " +
             fmt(worst) + " (<= 1e-8), " + fmt(elapsed) + " s (<= 5 s)");
}

// 2. Forward direction: shares equal 1 - alpha and condition (b) holds on the grid.
void criterion_2() {
  double worst_share = 0.0;
  double worst_condition_b = 0.0;
  for (const CobbDouglasParams params : {CobbDouglasParams{1.8, 0.42},
                                         CobbDouglasParams{2.5, 0.3},
                                         CobbDouglasParams{0.9, 0.75}}) {
    const CobbDouglas pf(params);
    const auto scan = share_scan(pf, ScanConfig::default_grid());
    for (const auto& e : scan.entries) {
      worst_share = std::max(worst_share, std::abs(e.labour_share - (1.0 - params.alpha)));
      worst_condition_b = std::max(
          worst_condition_b,
          std::abs(condition_b_residual({e.wage, e.rental}, e.minimizer, params.beta())));
    }
  }
  report(2, worst_share <= 1e-8 && worst_condition_b <= 1e-8,
         "theorem forward direction on 5x5x3 grids: share dev " + fmt(worst_share) +
             ", condition-(b) residual " + fmt(worst_condition_b) + " (both <= 1e-8)");
}

// 3. Converse at desk scale: verdicts and parameter recovery.
void criterion_3() {
  const auto start = Clock::now();
  const ScanConfig cfg = ScanConfig::default_grid();

  const auto cd = characterize(CobbDouglas({2.5, 0.3}), cfg);
  bool pass = cd.is_cobb_douglas && std::abs(cd.alpha_hat - 0.3) <= 1e-6 &&
              std::abs(cd.scale_hat - 2.5) / 2.5 <= 1e-6;
  std::string detail = "cobb-douglas(2.5, 0.3) recovered (alpha err " +
                       fmt(std::abs(cd.alpha_hat - 0.3)) + ", A rel err " +
                       fmt(std::abs(cd.scale_hat - 2.5) / 2.5) + ")";

  for (double rho : {-2.0, -1.0, 0.5}) {
    const auto verdict = characterize(CES({1.0, 0.5, rho}), cfg);
    if (verdict.is_cobb_douglas) {
      pass = false;
      detail += "; CES(rho=" + fmt(rho) + ") wrongly accepted";
    }
  }
  if (characterize(Leontief{}, cfg).is_cobb_douglas) {
    pass = false;
    detail += "; Leontief wrongly accepted";
  }
  if (characterize(Perturbed({{1.0, 0.5}, 0.5}), cfg).is_cobb_douglas) {
    pass = false;
    detail += "; Perturbed wrongly accepted";
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed <= 10.0;
  report(3, pass,
         "theorem converse verdicts: " + detail + ", " + fmt(elapsed) + " s (<= 10 s)");
}

// 4. Euler/homogeneity residuals on the log grid.
void criterion_4() {
  const std::vector<double> axis = log_spaced(0.1, 10.0, 5);
  double worst_rel = 0.0;
  const CobbDouglas cd({2.0, 0.35});
  const CES ces_a({1.0, 0.5, -1.0});
  const CES ces_b({1.3, 0.4, -2.0});
  const CES ces_c({0.8, 0.6, 0.5});
  const Leontief leo;
  for (double k : axis) {
    for (double l : axis) {
      const Bundle b{k, l};
      for (const ProductionFunction* pf :
           {static_cast<const ProductionFunction*>(&cd),
            static_cast<const ProductionFunction*>(&ces_a),
            static_cast<const ProductionFunction*>(&ces_b),
            static_cast<const ProductionFunction*>(&ces_c),
            static_cast<const ProductionFunction*>(&leo)}) {
        if (!pf->differentiable_at(b)) continue;  // Leontief kink points
        worst_rel =
            std::max(worst_rel, std::abs(euler_residual(*pf, b)) / pf->evaluate(b));
      }
    }
  }

  double worst_shift = 0.0;
  for (double c : {0.3, 0.7}) {
    const Perturbed pert({{1.0, 0.5}, c});
    for (double k : axis) {
      for (double l : axis) {
        worst_shift = std::max(worst_shift, std::abs(euler_residual(pert, {k, l}) - c));
      }
    }
  }
  report(4, worst_rel <= 1e-9 && worst_shift <= 1e-9,
         "euler identity: degree-1 rel residual " + fmt(worst_rel) +
             " (<= 1e-9), perturbed shift abs err " + fmt(worst_shift) + " (<= 1e-9)");
}

// 5. Analytic gradients against central finite differences.
void criterion_5() {
  const std::vector<double> axis = log_spaced(0.1, 10.0, 5);
  double worst = 0.0;
  const CobbDouglas cd({2.5, 0.3});
  const CES ces_a({1.0, 0.5, -1.0});
  const CES ces_b({1.3, 0.4, -2.0});
  const CES ces_c({0.8, 0.6, 0.5});
  for (double k : axis) {
    for (double l : axis) {
      for (const ProductionFunction* pf :
           {static_cast<const ProductionFunction*>(&cd),
            static_cast<const ProductionFunction*>(&ces_a),
            static_cast<const ProductionFunction*>(&ces_b),
            static_cast<const ProductionFunction*>(&ces_c)}) {
        const Gradient got = pf->gradient({k, l});
        const Gradient fd = oracles::fd_gradient(*pf, {k, l});
        worst = std::max({worst, std::abs(got.d_capital - fd.d_capital) /
                                     std::max(std::abs(fd.d_capital), 1e-300),
                          std::abs(got.d_labour - fd.d_labour) /
                              std::max(std::abs(fd.d_labour), 1e-300)});
      }
    }
  }
  report(5, worst <= 1e-6,
         "analytic vs central-difference gradients: worst rel err " + fmt(worst) +
             " (<= 1e-6)");
}

// 6. Reconstruction from the recovered beta and one anchor.
void criterion_6() {
  double worst = 0.0;
  for (const CobbDouglasParams params :
       {CobbDouglasParams{2.5, 0.3}, CobbDouglasParams{1.4, 0.62}}) {
    const CobbDouglas pf(params);
    const auto verdict = characterize(pf, ScanConfig::default_grid());
    const Bundle anchor{1.0, 1.0};
    const double anchor_output = pf.evaluate(anchor);
    for (double k : log_spaced(0.1, 10.0, 5)) {
      for (double l : log_spaced(0.1, 10.0, 5)) {
        const double got =
            reconstruct_output(verdict.beta_hat, anchor, anchor_output, {k, l});
        const double want = pf.evaluate({k, l});
        worst = std::max(worst, std::abs(got - want) / want);
      }
    }
  }
  report(6, worst <= 1e-6,
         "reconstruction from (beta_hat, anchor) vs evaluate on 5x5 grids: worst rel err " +
             fmt(worst) + " (<= 1e-6)");
}

// 7. Profit remarks: gap classification vs closed-form unit cost; Bowley sweep.
void criterion_7() {
  const CobbDouglasParams params{1.5, 0.35};
  const CobbDouglas pf(params);
  const auto closed_unit_cost = [&](double w, double r) {
    return std::pow(w / (1.0 - params.alpha), 1.0 - params.alpha) *
           std::pow(r / params.alpha, params.alpha) / params.scale;
  };

  bool pass = true;
  std::string detail;
  oracles::SeededUniform rng(777);
  double worst_locus_gap = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double w = rng.in(0.2, 3.0);
    const double r = rng.in(0.2, 3.0);
    const auto report_at = zero_profit_gap(pf, {w, r});
    const double closed_gap = 1.0 - closed_unit_cost(w, r);
    const auto expected = closed_gap > report_at.tolerance
                              ? ProfitRegime::unbounded_profit
                          : closed_gap < -report_at.tolerance ? ProfitRegime::shutdown
                                                              : ProfitRegime::zero_profit_ray;
    if (std::abs(report_at.gap - closed_gap) > 1e-8 ||
        report_at.classification != expected) {
      pass = false;
      detail += " gap mismatch at (w=" + fmt(w) + ", r=" + fmt(r) + ");";
    }
    // on the locus: invert the unit cost in closed form, gap must vanish
    const double r_locus =
        params.alpha * std::pow(params.scale * std::pow((1.0 - params.alpha) / w,
                                                        1.0 - params.alpha),
                                1.0 / params.alpha);
    worst_locus_gap =
        std::max(worst_locus_gap, std::abs(zero_profit_gap(pf, {w, r_locus}).gap));
  }
  if (worst_locus_gap > 1e-8) pass = false;

  double share_lo = 1.0, share_hi = 0.0;
  for (double w : log_spaced(0.2, 2.0, 10)) {
    const double share = bowley_share_check(pf, w).labour_share_of_output;
    share_lo = std::min(share_lo, share);
    share_hi = std::max(share_hi, share);
  }
  const double spread = share_hi - share_lo;
  const double share_err = std::max(std::abs(share_hi - (1.0 - params.alpha)),
                                    std::abs(share_lo - (1.0 - params.alpha)));
  if (spread > 1e-8 || share_err > 1e-8) pass = false;

  report(7, pass,
         "profit remarks: locus gap " + fmt(worst_locus_gap) +
             " (<= 1e-8), bowley sweep spread " + fmt(spread) + " and error " +
             fmt(share_err) + " (<= 1e-8)" + detail);
}

// 8. Output-scaling covariance and joint price-scaling invariance.
void criterion_8() {
  oracles::SeededUniform rng(31415);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const CobbDouglasParams params{rng.in(0.5, 3.0), rng.in(0.15, 0.85)};
    const CobbDouglas cd(params);
    const CES ces({rng.in(0.5, 2.0), rng.in(0.2, 0.8), -1.5});
    const FactorPrices prices{rng.in(0.3, 4.0), rng.in(0.3, 4.0)};
    const double q = rng.in(0.5, 10.0);
    for (const ProductionFunction* pf : {static_cast<const ProductionFunction*>(&cd),
                                         static_cast<const ProductionFunction*>(&ces)}) {
      const auto base = minimize_cost(*pf, prices, q);
      for (double t : {0.5, 2.0, 10.0}) {
        const auto scaled = minimize_cost(*pf, prices, t * q);
        worst = std::max({worst,
                          std::abs(scaled.minimizer.capital - t * base.minimizer.capital) /
                              (t * base.minimizer.capital),
                          std::abs(scaled.minimizer.labour - t * base.minimizer.labour) /
                              (t * base.minimizer.labour),
                          std::abs(scaled.cost - t * base.cost) / (t * base.cost)});
      }
      for (double s : {0.1, 3.0, 100.0}) {
        const auto scaled = minimize_cost(*pf, {s * prices.wage, s * prices.rental}, q);
        worst = std::max({worst,
                          std::abs(scaled.minimizer.capital - base.minimizer.capital) /
                              base.minimizer.capital,
                          std::abs(scaled.minimizer.labour - base.minimizer.labour) /
                              base.minimizer.labour,
                          std::abs(scaled.cost - s * base.cost) / (s * base.cost)});
      }
    }
  }
  report(8, worst <= 1e-8,
         "scale covariance and price-scale invariance: worst rel err " + fmt(worst) +
             " (<= 1e-8)");
}

// 9. CLI determinism: byte-identical machine output across repeated runs.
void criterion_9(double elapsed_total) {
  const fs::path dir = fs::temp_directory_path() / "isoshare_acceptance";
  fs::create_directories(dir);
  const auto run = [&](const std::string& args, const fs::path& out) {
    const std::string command = std::string(ISOSHARE_CLI_BIN) + " " + args + " --out " +
                                out.string() + " > " + (dir / "stdout.txt").string() +
                                " 2> " + (dir / "stderr.txt").string();
    const int status = std::system(command.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const std::vector<std::string> commands = {
      "minimize --family cobb-douglas --A 1 --alpha 0.5 --w 1 --r 1 --q 2 --seed 0",
      "characterize --family cobb-douglas --A 2.5 --alpha 0.3 --seed 0",
      "scan --family ces --A 1 --a 0.5 --rho -1 --seed 0",
      "profit --family cobb-douglas --A 1 --alpha 0.5 --w-sweep 0.2 2 10 --seed 0",
      "reconstruct --beta 1 --anchor-K 1 --anchor-L 1 --anchor-Y 1 --K 4 --L 1 --seed 0",
  };
  bool pass = true;
  std::string detail;
  for (const std::string& command : commands) {
    const fs::path a = dir / "a.out";
    const fs::path b = dir / "b.out";
    if (!run(command, a) || !run(command, b)) {
      pass = false;
      detail += " command failed: " + command + ";";
      continue;
    }
    if (slurp(a) != slurp(b)) {
      pass = false;
      detail += " output differs for: " + command + ";";
    }
  }
  pass = pass && elapsed_total < 60.0;
  report(9, pass,
         "cli determinism across 5 commands, suite elapsed " + fmt(elapsed_total) +
             " s (< 60 s)" + detail);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(seconds_since(start));
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}

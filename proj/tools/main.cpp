// isoshare: cost minimization on isoquants, factor-share scans, and
// production-function characterization from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoshare/characterization.hpp"
#include "isoshare/cost_minimization.hpp"
#include "isoshare/family_config.hpp"
#include "isoshare/production.hpp"
#include "isoshare/profit.hpp"
#include "report.hpp"
#include "scenario.hpp"

namespace {

using namespace isoshare;
using cli::format_human;
using cli::format_number;
using cli::Record;
using cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;
constexpr int kExitInternal = 4;

struct CommonOptions {
  std::string family;
  std::map<std::string, double> set_params;
  std::string grid_spec;
  std::string out_path;
  std::string format;  // empty, "record", or "table"
  long long seed = 0;
};

void add_family_flags(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--family", opts.family,
                 "Technology family: cobb-douglas | ces | leontief | perturbed");
  // One flag per known family parameter; only flags the user sets are kept.
  static const char* const kParams[] = {"A", "alpha", "a", "rho", "c", "k_coef", "l_coef"};
  for (const char* name : kParams) {
    const std::string flag = std::string("--") + name;
    cmd.add_option_function<double>(
        flag, [&opts, name](double value) { opts.set_params[name] = value; },
        std::string("Family parameter ") + name);
  }
}

void add_output_flags(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--grid-spec", opts.grid_spec, "Scenario configuration file");
  cmd.add_option("--out", opts.out_path, "Write machine-readable output to this path");
  cmd.add_option("--format", opts.format, "Machine output format: record | table")
      ->check(CLI::IsMember({"record", "table"}));
  cmd.add_option("--seed", opts.seed, "Seed recorded with machine output (default 0)");
}

std::optional<ConfigDocument> load_document(const CommonOptions& opts) {
  if (opts.grid_spec.empty()) return std::nullopt;
  return cli::load_scenario_file(opts.grid_spec);
}

std::unique_ptr<ProductionFunction> build_family(const CommonOptions& opts,
                                                 const ConfigDocument* doc,
                                                 FamilyConfig* out_config = nullptr) {
  const FamilyConfig config =
      cli::resolve_family_config({opts.family, opts.set_params}, doc);
  if (out_config != nullptr) *out_config = config;
  return make_production_function(config);
}

void add_family_fields(Record& record, const FamilyConfig& config) {
  record.add("family", config.family);
  for (const auto& [key, value] : config.params) record.add(key, value);
}

/// Machine output goes to --out when given, otherwise to stdout when --format
/// was requested explicitly.
void emit_machine(const CommonOptions& opts,
                  const std::function<void(std::ostream&)>& writer) {
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    if (!out) throw DomainError("cannot open output file '" + opts.out_path + "'");
    writer(out);
    return;
  }
  if (!opts.format.empty()) {
    std::cout << "\n";
    writer(std::cout);
  }
}

std::string pick_format(const CommonOptions& opts, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
  const std::string format = opts.format.empty() ? fallback : opts.format;
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw DomainError("format '" + format + "' does not apply to this command");
  }
  return format;
}

// ---------------------------------------------------------------------------
// minimize

struct MinimizeOptions {
  CommonOptions common;
  double wage = 0.0;
  double rental = 0.0;
  double output = 0.0;
};

void run_minimize(const MinimizeOptions& opts) {
  const auto doc = load_document(opts.common);
  FamilyConfig config;
  const auto pf = build_family(opts.common, doc ? &*doc : nullptr, &config);
  pick_format(opts.common, "record", {"record"});

  const FactorPrices prices{opts.wage, opts.rental};
  const CostMinResult res = minimize_cost(*pf, prices, opts.output);

  std::cout << "minimize: " << pf->description() << "  w=" << format_human(opts.wage)
            << " r=" << format_human(opts.rental) << " q=" << format_human(opts.output)
            << "\n";
  std::cout << "  minimizer: K=" << format_human(res.minimizer.capital)
            << " L=" << format_human(res.minimizer.labour) << "\n";
  std::cout << "  cost=" << format_human(res.cost)
            << "  labour_share=" << format_human(res.labour_share);
  if (res.lagrange_lambda) {
    std::cout << "  lambda=" << format_human(*res.lagrange_lambda);
  }
  std::cout << "\n";
  std::cout << "  residuals: feasibility=" << format_human(res.feasibility_residual);
  if (res.stationarity_residual) {
    std::cout << " stationarity=" << format_human(*res.stationarity_residual);
  } else {
    std::cout << " stationarity=n/a (not differentiable at the minimizer)";
  }
  std::cout << "  (evaluations: " << res.evaluations << ")\n";

  Record record;
  record.add("command", std::string("minimize"));
  add_family_fields(record, config);
  record.add("w", opts.wage);
  record.add("r", opts.rental);
  record.add("q", opts.output);
  record.add("seed", opts.common.seed);
  record.add("capital", res.minimizer.capital);
  record.add("labour", res.minimizer.labour);
  record.add("cost", res.cost);
  record.add("labour_share", res.labour_share);
  record.add("feasibility_residual", res.feasibility_residual);
  if (res.lagrange_lambda) record.add("lagrange_lambda", *res.lagrange_lambda);
  if (res.stationarity_residual) {
    record.add("stationarity_residual", *res.stationarity_residual);
  }
  record.add("evaluations", res.evaluations);

  if (config.family == "cobb-douglas") {
    const CobbDouglasParams params{config.params.at("A"), config.params.at("alpha")};
    const Bundle closed = closed_form_cd_minimizer(params, prices, opts.output);
    const double gap =
        std::max(std::abs(closed.capital - res.minimizer.capital) / closed.capital,
                 std::abs(closed.labour - res.minimizer.labour) / closed.labour);
    std::cout << "  closed form: K=" << format_human(closed.capital)
              << " L=" << format_human(closed.labour)
              << "  numeric/closed-form max rel gap=" << format_human(gap) << "\n";
    record.add("closed_form_capital", closed.capital);
    record.add("closed_form_labour", closed.labour);
    record.add("closed_form_max_rel_gap", gap);
  }

  emit_machine(opts.common, [&](std::ostream& out) { cli::write_record(out, record); });
}

// ---------------------------------------------------------------------------
// scan / characterize

Table share_table(const ShareScanReport& report) {
  Table table;
  table.header = {"w", "r", "q", "K", "L", "share", "condition_b_residual"};
  for (const auto& e : report.entries) {
    const double residual =
        condition_b_residual({e.wage, e.rental}, e.minimizer, report.beta_hat);
    table.rows.push_back({e.wage, e.rental, e.output, e.minimizer.capital,
                          e.minimizer.labour, e.labour_share, residual});
  }
  return table;
}

struct ScanOptions {
  CommonOptions common;
  unsigned threads = 1;
  std::optional<double> tolerance;
};

void run_scan(const ScanOptions& opts) {
  const auto doc = load_document(opts.common);
  FamilyConfig config;
  const auto pf = build_family(opts.common, doc ? &*doc : nullptr, &config);
  ScanConfig cfg = cli::resolve_scan_config(doc ? &*doc : nullptr);
  if (opts.tolerance) cfg.share_tolerance = *opts.tolerance;
  const std::string format = pick_format(opts.common, "table", {"table", "record"});

  const ShareScanReport report = share_scan(*pf, cfg, opts.threads);

  std::cout << "scan: " << pf->description() << "  " << report.entries.size()
            << " grid points\n";
  std::cout << "  mean labour share=" << format_human(report.mean_share)
            << "  max deviation=" << format_human(report.max_deviation)
            << "  beta_hat=" << format_human(report.beta_hat) << "\n";
  std::cout << "  shares " << (report.max_deviation <= cfg.share_tolerance ? "are" : "are NOT")
            << " constant within the numeric tolerance "
            << format_human(cfg.share_tolerance) << "\n";

  emit_machine(opts.common, [&](std::ostream& out) {
    if (format == "table") {
      cli::write_table(out, share_table(report));
      return;
    }
    Record record;
    record.add("command", std::string("scan"));
    add_family_fields(record, config);
    record.add("seed", opts.common.seed);
    record.add("grid_points", static_cast<long long>(report.entries.size()));
    record.add("mean_share", report.mean_share);
    record.add("max_deviation", report.max_deviation);
    record.add("beta_hat", report.beta_hat);
    cli::write_record(out, record);
  });
}

void run_characterize(const ScanOptions& opts) {
  const auto doc = load_document(opts.common);
  FamilyConfig config;
  const auto pf = build_family(opts.common, doc ? &*doc : nullptr, &config);
  ScanConfig cfg = cli::resolve_scan_config(doc ? &*doc : nullptr);
  if (opts.tolerance) cfg.verdict_tolerance = *opts.tolerance;
  const std::string format = pick_format(opts.common, "table", {"table", "record"});

  const ShareScanReport report = share_scan(*pf, cfg, opts.threads);
  const CharacterizationVerdict verdict = characterize(*pf, cfg, opts.threads);

  std::cout << "characterize: " << pf->description() << "\n";
  std::cout << "  verdict: " << (verdict.is_cobb_douglas ? "cobb-douglas" : "NOT cobb-douglas")
            << " at tolerance " << format_human(cfg.verdict_tolerance) << "\n";
  std::cout << "  alpha_hat=" << format_human(verdict.alpha_hat)
            << "  A_hat=" << format_human(verdict.scale_hat)
            << "  beta_hat=" << format_human(verdict.beta_hat) << "\n";
  std::cout << "  share max deviation=" << format_human(verdict.share_max_deviation)
            << "  A max deviation=" << format_human(verdict.scale_max_deviation) << "\n";
  if (verdict.euler_grid_differentiable) {
    std::cout << "  euler max residual=" << format_human(verdict.euler_max_residual)
              << "\n";
  } else {
    std::cout << "  euler check: NotDifferentiable on the probe grid (kinks); "
                 "differentiability hypothesis fails\n";
  }
  if (verdict.low_confidence) {
    std::cout << "  note: single price point; verdict is low confidence\n";
  }

  emit_machine(opts.common, [&](std::ostream& out) {
    if (format == "table") {
      cli::write_table(out, share_table(report));
      return;
    }
    Record record;
    record.add("command", std::string("characterize"));
    add_family_fields(record, config);
    record.add("seed", opts.common.seed);
    record.add("is_cobb_douglas", std::string(verdict.is_cobb_douglas ? "true" : "false"));
    record.add("alpha_hat", verdict.alpha_hat);
    record.add("A_hat", verdict.scale_hat);
    record.add("beta_hat", verdict.beta_hat);
    record.add("share_max_deviation", verdict.share_max_deviation);
    record.add("A_max_deviation", verdict.scale_max_deviation);
    record.add("euler_max_residual", verdict.euler_max_residual);
    record.add("euler_grid_differentiable",
               std::string(verdict.euler_grid_differentiable ? "true" : "false"));
    record.add("low_confidence", std::string(verdict.low_confidence ? "true" : "false"));
    cli::write_record(out, record);
  });
}

// ---------------------------------------------------------------------------
// profit

struct ProfitOptions {
  CommonOptions common;
  std::optional<double> wage;
  std::optional<double> rental;
  std::optional<double> capital;
  std::optional<double> labour;
  std::vector<double> sweep;  // lo hi count
  double tolerance = 1e-8;
};

void run_profit(const ProfitOptions& opts) {
  const auto doc = load_document(opts.common);
  FamilyConfig config;
  const auto pf = build_family(opts.common, doc ? &*doc : nullptr, &config);

  if (!opts.sweep.empty()) {
    pick_format(opts.common, "table", {"table"});
    if (opts.sweep.size() != 3) {
      throw DomainError("--w-sweep expects `lo hi count`");
    }
    const double count = opts.sweep[2];
    if (count < 1.0 || count != std::floor(count)) {
      throw DomainError("--w-sweep count must be a positive integer");
    }
    const auto wages = log_spaced(opts.sweep[0], opts.sweep[1],
                                  static_cast<std::size_t>(count));
    std::cout << "profit sweep: " << pf->description() << "  " << wages.size()
              << " wage points on the zero-profit locus\n";
    Table table;
    table.header = {"w", "r_star", "labour_share_of_output"};
    for (double w : wages) {
      const BowleyCheck check = bowley_share_check(*pf, w);
      table.rows.push_back({w, check.rental, check.labour_share_of_output});
      std::cout << "  w=" << format_human(w) << "  r*=" << format_human(check.rental)
                << "  share=" << format_human(check.labour_share_of_output) << "\n";
    }
    emit_machine(opts.common, [&](std::ostream& out) { cli::write_table(out, table); });
    return;
  }

  if (!opts.wage || !opts.rental) {
    throw DomainError("profit needs either --w and --r, or --w-sweep lo hi count");
  }
  pick_format(opts.common, "record", {"record"});
  const FactorPrices prices{*opts.wage, *opts.rental};
  const ZeroProfitReport report = zero_profit_gap(*pf, prices, opts.tolerance);

  std::cout << "profit: " << pf->description() << "  w=" << format_human(prices.wage)
            << " r=" << format_human(prices.rental) << "\n";
  std::cout << "  " << to_string(report.classification)
            << ", gap=" << format_human(report.gap)
            << " (unit cost=" << format_human(report.unit_cost_min.cost) << ")\n";

  Record record;
  record.add("command", std::string("profit"));
  add_family_fields(record, config);
  record.add("w", prices.wage);
  record.add("r", prices.rental);
  record.add("seed", opts.common.seed);
  record.add("gap", report.gap);
  record.add("classification", std::string(to_string(report.classification)));
  record.add("tolerance", report.tolerance);
  record.add("unit_cost", report.unit_cost_min.cost);
  record.add("unit_capital", report.unit_cost_min.minimizer.capital);
  record.add("unit_labour", report.unit_cost_min.minimizer.labour);

  if (opts.capital && opts.labour) {
    const double point_profit = profit(*pf, prices, {*opts.capital, *opts.labour});
    std::cout << "  profit at (K=" << format_human(*opts.capital)
              << ", L=" << format_human(*opts.labour)
              << ") = " << format_human(point_profit) << "\n";
    record.add("point_capital", *opts.capital);
    record.add("point_labour", *opts.labour);
    record.add("point_profit", point_profit);
  }

  emit_machine(opts.common, [&](std::ostream& out) { cli::write_record(out, record); });
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructOptions {
  CommonOptions common;
  double beta = 0.0;
  double anchor_capital = 0.0;
  double anchor_labour = 0.0;
  double anchor_output = 0.0;
  double capital = 0.0;
  double labour = 0.0;
};

void run_reconstruct(const ReconstructOptions& opts) {
  pick_format(opts.common, "record", {"record"});
  const double value =
      reconstruct_output(opts.beta, {opts.anchor_capital, opts.anchor_labour},
                         opts.anchor_output, {opts.capital, opts.labour});
  const double alpha = opts.beta / (opts.beta + 1.0);

  std::cout << "reconstruct: beta=" << format_human(opts.beta)
            << " (alpha=" << format_human(alpha) << ")  anchor ((K="
            << format_human(opts.anchor_capital) << ", L=" << format_human(opts.anchor_labour)
            << "), Y0=" << format_human(opts.anchor_output) << ")\n";
  std::cout << "  Y(K=" << format_human(opts.capital) << ", L=" << format_human(opts.labour)
            << ") = " << format_human(value) << "\n";

  Record record;
  record.add("command", std::string("reconstruct"));
  record.add("beta", opts.beta);
  record.add("alpha", alpha);
  record.add("anchor_capital", opts.anchor_capital);
  record.add("anchor_labour", opts.anchor_labour);
  record.add("anchor_output", opts.anchor_output);
  record.add("capital", opts.capital);
  record.add("labour", opts.labour);
  record.add("seed", opts.common.seed);
  record.add("output", value);
  emit_machine(opts.common, [&](std::ostream& out) { cli::write_record(out, record); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoshare: cost minimization on isoquants and factor-share analysis"};
  app.require_subcommand(1);

  MinimizeOptions minimize_opts;
  CLI::App* minimize_cmd =
      app.add_subcommand("minimize", "Minimize factor cost along an isoquant");
  add_family_flags(*minimize_cmd, minimize_opts.common);
  add_output_flags(*minimize_cmd, minimize_opts.common);
  minimize_cmd->add_option("--w", minimize_opts.wage, "Wage")->required();
  minimize_cmd->add_option("--r", minimize_opts.rental, "Rental rate")->required();
  minimize_cmd->add_option("--q", minimize_opts.output, "Output level")->required();
  minimize_cmd->callback([&] { run_minimize(minimize_opts); });

  ScanOptions scan_opts;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Labour-share scan over a price/output grid");
  add_family_flags(*scan_cmd, scan_opts.common);
  add_output_flags(*scan_cmd, scan_opts.common);
  scan_cmd->add_option("--threads", scan_opts.threads, "Grid workers (default 1)");
  scan_cmd->add_option_function<double>(
      "--tol", [&](double v) { scan_opts.tolerance = v; },
      "Numeric share tolerance (default 1e-6)");
  scan_cmd->callback([&] { run_scan(scan_opts); });

  ScanOptions characterize_opts;
  CLI::App* characterize_cmd = app.add_subcommand(
      "characterize", "Decide whether the technology is Cobb-Douglas and recover (A, alpha)");
  add_family_flags(*characterize_cmd, characterize_opts.common);
  add_output_flags(*characterize_cmd, characterize_opts.common);
  characterize_cmd->add_option("--threads", characterize_opts.threads,
                               "Grid workers (default 1)");
  characterize_cmd->add_option_function<double>(
      "--tol", [&](double v) { characterize_opts.tolerance = v; },
      "Verdict tolerance (default 1e-4)");
  characterize_cmd->callback([&] { run_characterize(characterize_opts); });

  ProfitOptions profit_opts;
  CLI::App* profit_cmd =
      app.add_subcommand("profit", "Zero-profit gap, locus, and share-of-output checks");
  add_family_flags(*profit_cmd, profit_opts.common);
  add_output_flags(*profit_cmd, profit_opts.common);
  profit_cmd->add_option_function<double>(
      "--w", [&](double v) { profit_opts.wage = v; }, "Wage");
  profit_cmd->add_option_function<double>(
      "--r", [&](double v) { profit_opts.rental = v; }, "Rental rate");
  profit_cmd->add_option_function<double>(
      "--K", [&](double v) { profit_opts.capital = v; }, "Evaluate profit at this capital");
  profit_cmd->add_option_function<double>(
      "--L", [&](double v) { profit_opts.labour = v; }, "Evaluate profit at this labour");
  profit_cmd->add_option("--w-sweep", profit_opts.sweep,
                         "Sweep the zero-profit locus: lo hi count")
      ->expected(3);
  profit_cmd->add_option("--tol", profit_opts.tolerance,
                         "Zero-profit classification tolerance (default 1e-8)");
  profit_cmd->callback([&] { run_profit(profit_opts); });

  ReconstructOptions reconstruct_opts;
  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Rebuild output from beta and one anchor observation");
  add_output_flags(*reconstruct_cmd, reconstruct_opts.common);
  reconstruct_cmd->add_option("--beta", reconstruct_opts.beta, "Share ratio beta")
      ->required();
  reconstruct_cmd->add_option("--anchor-K", reconstruct_opts.anchor_capital, "Anchor capital")
      ->required();
  reconstruct_cmd->add_option("--anchor-L", reconstruct_opts.anchor_labour, "Anchor labour")
      ->required();
  reconstruct_cmd->add_option("--anchor-Y", reconstruct_opts.anchor_output, "Anchor output")
      ->required();
  reconstruct_cmd->add_option("--K", reconstruct_opts.capital, "Target capital")->required();
  reconstruct_cmd->add_option("--L", reconstruct_opts.labour, "Target labour")->required();
  reconstruct_cmd->callback([&] { run_reconstruct(reconstruct_opts); });

  try {
    app.parse(argc, argv);
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

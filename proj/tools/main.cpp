// Command-line workbench driver.
//
//   verify    run the randomized inequality suite over parameter grids
//   search    hill-climb for extremal Hoelder ratios at one (p, q)
//   sweep     run the search across a (p, q) grid, best ratio per pair
//   selftest  fast internal consistency battery
//
// Exit codes: 0 success, 1 violation of an explicit-constant inequality,
// 2 usage or configuration error, 3 numerical failure (errors during
// trials or a failed selftest).
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mazurlab/funccalc.hpp"
#include "mazurlab/random_elements.hpp"
#include "mazurlab/report.hpp"

namespace {

using namespace mazurlab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Integer grid syntax: comma-separated entries, each a number or an
// inclusive range "a..b".
std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty()) throw ConfigError("empty entry in integer grid: " + text);
    const size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw ConfigError("descending range in grid: " + item);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("cannot parse integer grid entry: " + item);
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw ConfigError("empty integer grid: " + text);
  return out;
}

std::vector<double> parse_double_grid(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty()) throw ConfigError("empty entry in grid: " + text);
    try {
      size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw ConfigError("trailing junk in grid entry: " + item);
      out.push_back(v);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("cannot parse grid entry: " + item);
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw ConfigError("empty grid: " + text);
  return out;
}

std::vector<Lemma> parse_lemmas(const std::string& text) {
  std::vector<Lemma> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(lemma_from_name(item));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file: " + path);
  os << content;
}

struct VerifyOptions {
  std::string lemmas, dims, thetas, ps, qs, alphas;
  int trials = 200;
  uint64_t seed = 1;
  double cap = kDefaultRatioCap;
  int threads = 0;
  std::string json_path, records_csv_path, summary_csv_path;
  bool verbose = false;
};

int run_verify(const VerifyOptions& opt) {
  SuiteConfig config;
  if (!opt.lemmas.empty()) config.lemmas = parse_lemmas(opt.lemmas);
  if (!opt.dims.empty()) config.grids.dims = parse_int_grid(opt.dims);
  if (!opt.thetas.empty()) config.grids.thetas = parse_double_grid(opt.thetas);
  if (!opt.ps.empty()) config.grids.ps = parse_double_grid(opt.ps);
  if (!opt.qs.empty()) config.grids.qs = parse_double_grid(opt.qs);
  if (!opt.alphas.empty()) config.grids.alphas = parse_double_grid(opt.alphas);
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.cap = opt.cap;
  config.threads = opt.threads;
  config.validate();

  const SuiteResult result = run_suite(config);

  int explicit_violations = 0, cap_violations = 0;
  for (const CheckRecord& rec : result.records) {
    if (rec.status != CheckStatus::fail) continue;
    if (rec.empirical())
      ++cap_violations;
    else
      ++explicit_violations;
  }

  std::printf("suite: %zu cells x %d trials, seed %llu\n", result.summary.cells.size(),
              config.trials, static_cast<unsigned long long>(config.seed));
  for (const auto& [lemma, ratio] : result.summary.max_ratios) {
    if (std::isnan(ratio))
      std::printf("  %-24s max ratio      -\n", lemma_name(lemma));
    else
      std::printf("  %-24s max ratio %10.6f\n", lemma_name(lemma), ratio);
  }
  for (const CellSummary& cell : result.summary.cells) {
    if (!opt.verbose && cell.failures == 0 && cell.errors == 0) continue;
    std::printf(
        "  cell %-4zu %-24s dim=%d p=%-4g q=%-4g theta=%-4g alpha=%-4g "
        "fail=%d err=%d skip=%d max_ratio=%g\n",
        cell.index, lemma_name(cell.params.lemma), cell.params.dim, cell.params.p,
        cell.params.q, cell.params.theta, cell.params.alpha, cell.failures,
        cell.errors, cell.skipped, cell.max_ratio);
  }
  std::printf(
      "violations: %d explicit, %d over-cap; errors: %d; skipped: %d; records: %zu\n",
      explicit_violations, cap_violations, result.summary.errors,
      result.summary.skipped, result.records.size());

  if (!opt.json_path.empty()) write_file(opt.json_path, suite_report_json(result));
  if (!opt.records_csv_path.empty()) {
    std::ofstream os(opt.records_csv_path);
    if (!os) throw ConfigError("cannot open output file: " + opt.records_csv_path);
    write_records_csv(os, result.records);
  }
  if (!opt.summary_csv_path.empty()) {
    std::ofstream os(opt.summary_csv_path);
    if (!os) throw ConfigError("cannot open output file: " + opt.summary_csv_path);
    write_summary_csv(os, result.summary);
  }

  if (explicit_violations > 0) return kExitViolation;
  if (result.summary.errors > 0) return kExitNumerical;
  return kExitOk;
}

struct SearchOptions {
  SearchParams params;
  std::string mode = "general";
  std::string json_path;
};

int run_search(SearchOptions& opt) {
  opt.params.mode = search_mode_from_name(opt.mode);
  opt.params.validate();
  const SearchResult result = maximize(opt.params);
  std::printf("search p=%g q=%g dim=%d mode=%s: best ratio %.12g (%ld proposals, %d restarts)\n",
              opt.params.p, opt.params.q, opt.params.dim,
              search_mode_name(opt.params.mode), result.best_ratio, result.proposals,
              opt.params.restarts);
  if (!opt.json_path.empty()) write_file(opt.json_path, search_report_json(result));
  return kExitOk;
}

struct SweepOptions {
  SearchParams base;
  std::string mode = "general";
  std::string ps = "1", qs = "1.1,1.5,2";
  std::string csv_path;
};

int run_sweep(SweepOptions& opt) {
  opt.base.mode = search_mode_from_name(opt.mode);
  opt.base.validate();
  const std::vector<double> ps = parse_double_grid(opt.ps);
  const std::vector<double> qs = parse_double_grid(opt.qs);
  const std::vector<SweepRow> rows = sweep(opt.base, ps, qs);
  std::printf("%8s %8s %14s %8s\n", "p", "q", "best_ratio", "iters");
  for (const SweepRow& r : rows)
    std::printf("%8g %8g %14.8f %8ld\n", r.p, r.q, r.best_ratio, r.iters);
  if (!opt.csv_path.empty()) {
    std::ofstream os(opt.csv_path);
    if (!os) throw ConfigError("cannot open output file: " + opt.csv_path);
    write_sweep_csv(os, rows);
  }
  return kExitOk;
}

int run_selftest(int quadrature_nodes) {
  QuadratureScheme scheme;
  scheme.nodes = quadrature_nodes;
  int failures = 0;
  auto report = [&](const char* name, double err, double tol) {
    const bool ok = err <= tol;
    if (!ok) ++failures;
    std::printf("[%s] %-34s %.3e (tol %.1e)\n", ok ? " ok " : "FAIL", name, err, tol);
  };

  Rng rng(2718281828);
  const AlgebraShape shape{{4, 1.0}, {3, 0.5}};

  {
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Element x = random_gaussian(shape, rng);
      const SingularDecomposition dec = svd(x);
      worst = std::fmax(worst, max_abs(dec.apply_power(1.0) - x));
    }
    report("svd reconstruction", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (double theta : {0.1, 0.5, 0.9})
      worst = std::fmax(worst,
                        std::abs(c_theta_integral(theta, scheme) - c_theta(theta)));
    report("power integral constant", worst, 1e-8);
  }
  {
    double worst = 0.0;
    for (double theta : {0.3, 0.7}) {
      const Element x = random_positive(shape, rng, 0.1, 10.0);
      const Element diff =
          power_via_integral(x, theta, scheme) - power_pos(x, theta);
      worst = std::fmax(worst, max_abs(diff) / std::fmax(1.0, max_abs(power_pos(x, theta))));
    }
    report("power integral vs spectral", worst, 1e-6);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Element x = random_gaussian(shape, rng);
      const double p = 1.0 + 2.0 * rng.uniform01();
      const double q = 1.0 + 2.0 * rng.uniform01();
      const double lhs = schatten_norm(mazur_map(x, p, q), PNorm(q));
      const double rhs = std::pow(schatten_norm(x, PNorm(p)), p / q);
      worst = std::fmax(worst, std::abs(lhs - rhs) / std::fmax(1.0, rhs));
    }
    report("map norm covariance", worst, 1e-9);
  }
  {
    SuiteConfig config;
    config.grids.dims = {1, 2, 3};
    config.grids.thetas = {0.2, 0.5, 0.9};
    config.grids.ps = {1.0, 2.0};
    config.grids.qs = {1.1, 2.0};
    config.grids.alphas = {1.5, 2.7};
    config.trials = 20;
    config.seed = 7;
    const SuiteResult result = run_suite(config);
    int explicit_violations = 0;
    for (const CheckRecord& rec : result.records)
      if (rec.status == CheckStatus::fail && !rec.empirical()) ++explicit_violations;
    report("mini suite explicit violations", explicit_violations, 0);
    report("mini suite errors", result.summary.errors, 0);
  }
  {
    SearchParams params;
    params.p = 1.0;
    params.q = 2.0;
    params.dim = 1;
    params.restarts = 3;
    params.iterations = 600;
    params.seed = 17;
    const SearchResult result = maximize(params);
    report("search scalar optimum", std::abs(result.best_ratio - std::sqrt(2.0)),
           1e-2);
  }

  std::printf("selftest: %s\n", failures == 0 ? "all checks passed" : "FAILURES");
  return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for noncommutative Mazur maps"};
  app.require_subcommand(1);

  VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the inequality suite");
  cmd_verify->add_option("--lemmas", verify.lemmas,
                         "Comma list of lemma names (default: all)");
  cmd_verify->add_option("--dims", verify.dims, "Block dims, e.g. 1..6 or 2,4");
  cmd_verify->add_option("--thetas", verify.thetas, "Theta grid, comma list");
  cmd_verify->add_option("--ps", verify.ps, "p grid, comma list");
  cmd_verify->add_option("--qs", verify.qs, "q grid, comma list");
  cmd_verify->add_option("--alphas", verify.alphas, "Alpha grid, comma list");
  cmd_verify->add_option("--trials", verify.trials, "Trials per cell")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", verify.seed, "Base seed");
  cmd_verify->add_option("--cap", verify.cap, "Empirical ratio cap")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--threads", verify.threads,
                         "Worker threads (0: MAZURLAB_THREADS or hardware)");
  cmd_verify->add_option("--json", verify.json_path, "Write full JSON report");
  cmd_verify->add_option("--records-csv", verify.records_csv_path,
                         "Write per-trial CSV");
  cmd_verify->add_option("--summary-csv", verify.summary_csv_path,
                         "Write per-cell CSV");
  cmd_verify->add_flag("--verbose", verify.verbose, "Print every cell");

  SearchOptions search_opt;
  CLI::App* cmd_search = app.add_subcommand("search", "Maximize the Hoelder ratio");
  cmd_search->add_option("--p", search_opt.params.p, "Source exponent");
  cmd_search->add_option("--q", search_opt.params.q, "Target exponent");
  cmd_search->add_option("--dim", search_opt.params.dim, "Matrix dimension")
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--mode", search_opt.mode,
                         "general | selfadjoint | psd");
  cmd_search->add_option("--restarts", search_opt.params.restarts, "Restarts")
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--iterations", search_opt.params.iterations,
                         "Proposals per restart")
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--step", search_opt.params.initial_step,
                         "Initial step (default 0.3/dim)");
  cmd_search->add_option("--seed", search_opt.params.seed, "Seed");
  cmd_search->add_option("--json", search_opt.json_path, "Write JSON result");

  SweepOptions sweep_opt;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Search across a (p, q) grid");
  cmd_sweep->add_option("--ps", sweep_opt.ps, "p grid, comma list");
  cmd_sweep->add_option("--qs", sweep_opt.qs, "q grid, comma list");
  cmd_sweep->add_option("--dim", sweep_opt.base.dim, "Matrix dimension")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--mode", sweep_opt.mode, "general | selfadjoint | psd");
  cmd_sweep->add_option("--restarts", sweep_opt.base.restarts, "Restarts")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--iterations", sweep_opt.base.iterations,
                        "Proposals per restart")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seed", sweep_opt.base.seed, "Base seed");
  cmd_sweep->add_option("--csv", sweep_opt.csv_path, "Write sweep CSV");

  int selftest_nodes = QuadratureScheme{}.nodes;
  CLI::App* cmd_selftest =
      app.add_subcommand("selftest", "Fast internal consistency battery");
  cmd_selftest
      ->add_option("--debug-quadrature-nodes", selftest_nodes,
                   "Override quadrature node count")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_search->parsed()) return run_search(search_opt);
    if (cmd_sweep->parsed()) return run_sweep(sweep_opt);
    if (cmd_selftest->parsed()) return run_selftest(selftest_nodes);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitConfig;
}

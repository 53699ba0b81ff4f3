// Command-line front end: purity / match / sweep / report / dump over a
// plain `key = value` config file.  Exit codes: 0 success, 2 config error,
// 3 numeric error.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pdcmode/analytic.hpp"
#include "pdcmode/config.hpp"
#include "pdcmode/corr_matrix.hpp"
#include "pdcmode/errors.hpp"
#include "pdcmode/experiment.hpp"
#include "pdcmode/kernels.hpp"
#include "pdcmode/matcher.hpp"
#include "pdcmode/units.hpp"

namespace {

using namespace pdcmode;

struct CliOptions {
  std::string subcommand;
  std::string config_path;
  bool csv = false;
  bool parallel = false;
  std::optional<long> grid_n;
  std::string kernel = "cpp";
  // sweep arguments
  std::string axis;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<long> steps;
};

[[noreturn]] void usage_error(const std::string& message) {
  throw ConfigError(message +
                    "\nusage: pdcmode <purity|match|sweep|report|dump> "
                    "--config <path> [--csv] [--grid-n <int>] [--parallel]\n"
                    "       sweep also needs --axis trigger.mu_t --from <x> "
                    "--to <x> --steps <n>\n"
                    "       dump accepts --kernel <cpp|dfg|spatial>");
}

CliOptions parse_cli(int argc, char** argv) {
  CliOptions opt;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) usage_error(std::string(flag) + " needs a value");
      return argv[++i];
    };
    auto next_long = [&](const char* flag) -> long {
      const std::string v = next(flag);
      char* end = nullptr;
      const long n = std::strtol(v.c_str(), &end, 10);
      if (end == v.c_str() || *end != '\0')
        usage_error(std::string(flag) + ": '" + v + "' is not an integer");
      return n;
    };
    auto next_double = [&](const char* flag) -> double {
      const std::string v = next(flag);
      char* end = nullptr;
      const double d = std::strtod(v.c_str(), &end);
      if (end == v.c_str() || *end != '\0')
        usage_error(std::string(flag) + ": '" + v + "' is not a number");
      return d;
    };
    if (arg == "--config") {
      opt.config_path = next("--config");
    } else if (arg == "--csv") {
      opt.csv = true;
    } else if (arg == "--parallel") {
      opt.parallel = true;
    } else if (arg == "--grid-n") {
      opt.grid_n = next_long("--grid-n");
    } else if (arg == "--kernel") {
      opt.kernel = next("--kernel");
    } else if (arg == "--axis") {
      opt.axis = next("--axis");
    } else if (arg == "--from") {
      opt.from = next_double("--from");
    } else if (arg == "--to") {
      opt.to = next_double("--to");
    } else if (arg == "--steps") {
      opt.steps = next_long("--steps");
    } else if (!arg.empty() && arg[0] == '-') {
      usage_error("unknown flag '" + arg + "'");
    } else if (opt.subcommand.empty()) {
      opt.subcommand = arg;
    } else {
      usage_error("unexpected argument '" + arg + "'");
    }
  }
  if (opt.subcommand.empty()) usage_error("missing subcommand");
  if (opt.config_path.empty()) usage_error("missing --config <path>");
  return opt;
}

void print_row(const char* name, double value, bool csv) {
  if (csv)
    std::printf("%s,%.6g\n", name, value);
  else
    std::printf("%-24s %.6f\n", name, value);
}

std::size_t temporal_n(const CliOptions& opt, const Config& cfg) {
  const long n = opt.grid_n ? *opt.grid_n : cfg.get_int_or("grid.n", 96);
  if (n < 8) throw ConfigError("grid.n must be >= 8");
  return static_cast<std::size_t>(n);
}

std::size_t spatial_n(const Config& cfg) {
  const long n = cfg.get_int_or("grid.n_spatial", 48);
  if (n < 8) throw ConfigError("grid.n_spatial must be >= 8");
  return static_cast<std::size_t>(n);
}

QuadRule rule_from(const Config& cfg) {
  return parse_quad_rule(cfg.get_string_or("grid.rule", "gauss_legendre"));
}

bool has_spatial_keys(const Config& cfg) {
  return cfg.has("filter.pinhole_diameter_um") || cfg.has("filter.focal_mm") ||
         cfg.has("pump.beam_fwhm_mm");
}

SpatialScenario spatial_scenario_from(const Config& cfg) {
  SpatialScenario s;
  s.pump.kappa = dp_to_kappa_p(cfg.get_double("pump.beam_fwhm_mm") * 1e-3);
  s.filter.kind = Pinhole{
      .radius_rho = 0.5 * cfg.get_double("filter.pinhole_diameter_um") * 1e-6,
      .focal_F = cfg.get_double("filter.focal_mm") * 1e-3,
      .lambda_t = cfg.get_double("pump.lambda_nm") * 1e-9,
  };
  return s;
}

int cmd_purity(const CliOptions& opt, const Config& cfg) {
  bool did_anything = false;
  if (cfg.has("trigger.mu_t")) {
    const double mu_t = cfg.get_double("trigger.mu_t");
    const double analytic = p_temp(mu_t);
    const TemporalScenario s = scenario_from_mu(mu_t, std::nullopt);
    const Grid1D grid = temporal_grid_for(s, temporal_n(opt, cfg), rule_from(cfg));
    const double numeric = purity(build_cpp_temporal_numeric(s, grid));
    print_row("p_temp_analytic", analytic, opt.csv);
    print_row("p_temp_numeric", numeric, opt.csv);
    print_row("p_temp_abs_diff", std::abs(numeric - analytic), opt.csv);
    did_anything = true;
  }
  if (has_spatial_keys(cfg)) {
    const SpatialScenario s = spatial_scenario_from(cfg);
    const Grid2D grid = spatial_grid_for(s, spatial_n(cfg));
    const SpatialPurityReport r = spatial_purity_report(s, grid);
    print_row("p_sp_numeric", r.purity_numeric, opt.csv);
    print_row("p_sp_gaussian_formula", r.purity_gaussian_formula, opt.csv);
    if (r.purity_pinhole_formula)
      print_row("p_sp_pinhole_formula", *r.purity_pinhole_formula, opt.csv);
    print_row("p_sp_abs_diff",
              std::abs(r.purity_numeric - r.purity_gaussian_formula), opt.csv);
    did_anything = true;
  }
  if (!did_anything)
    throw ConfigError(
        "missing required key 'trigger.mu_t' (or the spatial keys "
        "pump.beam_fwhm_mm/pump.lambda_nm/filter.pinhole_diameter_um/"
        "filter.focal_mm)");
  return 0;
}

int cmd_match(const CliOptions& opt, const Config& cfg) {
  const double mu_t = cfg.get_double("trigger.mu_t");
  const bool optimize = cfg.get_bool_or("optimize", false);
  if (!optimize && !cfg.has("align.mu_A"))
    throw ConfigError("missing required key 'align.mu_A' (or set optimize = true)");

  // when optimizing, size the grid for the whole search bracket
  const double seed_mu_A =
      optimize ? 3.0 * (1.0 + mu_t) : cfg.get_double("align.mu_A");
  TemporalScenario s = scenario_from_mu(mu_t, seed_mu_A);
  const Grid1D grid = temporal_grid_for(s, temporal_n(opt, cfg), rule_from(cfg));

  std::optional<AlignmentOptimum> found;
  if (optimize) {
    found = optimize_alignment(s, grid);
    s.alignment->sigma_omega = found->mu_A_opt * s.pump.sigma_omega;
  }
  const MatchResult r = evaluate_match(s, grid);
  print_row("purity_cpp", r.purity_cpp, opt.csv);
  print_row("purity_classical", r.purity_classical, opt.csv);
  print_row("match", r.match, opt.csv);
  print_row("bound", r.bound, opt.csv);
  print_row("mu_A_used", r.mu_A_used, opt.csv);
  if (found) {
    print_row("mu_A_opt", found->mu_A_opt, opt.csv);
    print_row("mu_A_max_analytic", mu_A_max(mu_t), opt.csv);
  }
  return 0;
}

int cmd_sweep(const CliOptions& opt, const Config& cfg) {
  (void)cfg;
  if (opt.axis.empty() || !opt.from || !opt.to || !opt.steps)
    usage_error("sweep needs --axis, --from, --to and --steps");
  if (opt.axis != "trigger.mu_t")
    throw ConfigError("axis '" + opt.axis + "' is not sweepable (use trigger.mu_t)");
  const long steps = *opt.steps;
  if (steps < 2) throw ConfigError("--steps must be >= 2");
  if (!(*opt.from >= 0.0)) throw ConfigError("--from must be >= 0 for trigger.mu_t");

  std::vector<std::string> rows(static_cast<std::size_t>(steps));
  auto fill = [&](long k) {
    const double mu =
        *opt.from + (*opt.to - *opt.from) * static_cast<double>(k) /
                        static_cast<double>(steps - 1);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,%.6g", mu,
                  std::sqrt(p_temp(mu)), m_temp(mu, mu_A_max(mu)),
                  m_temp(mu, 0.0));
    rows[static_cast<std::size_t>(k)] = buf;
  };
  if (opt.parallel) {
    std::vector<std::thread> pool;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t]() {
        for (long k = static_cast<long>(t); k < steps;
             k += static_cast<long>(workers))
          fill(k);
      });
    for (auto& th : pool) th.join();
  } else {
    for (long k = 0; k < steps; ++k) fill(k);
  }

  std::printf("mu_t,sqrt_p_temp,m_opt,m_plane\n");
  for (const auto& row : rows) std::printf("%s\n", row.c_str());
  return 0;
}

int cmd_report(const CliOptions& opt, const Config& cfg) {
  LabParams p;
  p.lambda_nm = cfg.get_double("pump.lambda_nm");
  p.tau_fund_ps = cfg.get_double("pump.tau_fund_ps");
  p.filter_fwhm_nm = cfg.get_double("filter.fwhm_nm");
  p.pinhole_diameter_um = cfg.get_double("filter.pinhole_diameter_um");
  p.focal_mm = cfg.get_double("filter.focal_mm");
  p.pump_fwhm_mm = cfg.get_double("pump.beam_fwhm_mm");
  p.visibility = cfg.get_double("chain.visibility");
  p.tau_convention = parse_tau_convention(cfg.get_string_or(
      "chain.tau_convention", "pump_is_fund_over_sqrt2"));

  const ChainReport r = run_chain_with_overrides(
      p, cfg.maybe_double("chain.p_temp_override"),
      cfg.maybe_double("chain.p_sp_override"));

  if (!opt.csv) {
    std::ostringstream block;
    print_chain_report(r, block);
    std::fputs(block.str().c_str(), stdout);
  }
  std::printf("%s\n", chain_report_csv_row(r).c_str());
  return 0;
}

int cmd_dump(const CliOptions& opt, const Config& cfg) {
  std::ostringstream out;
  if (opt.kernel == "cpp" || opt.kernel == "dfg") {
    const double mu_t = cfg.get_double("trigger.mu_t");
    std::optional<double> mu_A;
    if (opt.kernel == "dfg") mu_A = cfg.get_double("align.mu_A");
    const TemporalScenario s = scenario_from_mu(mu_t, mu_A);
    const Grid1D grid = temporal_grid_for(s, temporal_n(opt, cfg), rule_from(cfg));
    const CorrMatrix m = (opt.kernel == "cpp")
                             ? build_cpp_temporal_numeric(s, grid)
                             : build_dfg_temporal(s, grid);
    write_csv(m, out);
  } else if (opt.kernel == "spatial") {
    const SpatialScenario s = spatial_scenario_from(cfg);
    const Grid2D grid = spatial_grid_for(s, spatial_n(cfg));
    write_csv(build_signal_spatial(s, grid), out);
  } else {
    throw ConfigError("unknown kernel '" + opt.kernel +
                      "' (expected cpp, dfg or spatial)");
  }
  std::fputs(out.str().c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const CliOptions opt = parse_cli(argc, argv);
    const Config cfg = Config::parse_file(opt.config_path);
    if (opt.subcommand == "purity") return cmd_purity(opt, cfg);
    if (opt.subcommand == "match") return cmd_match(opt, cfg);
    if (opt.subcommand == "sweep") return cmd_sweep(opt, cfg);
    if (opt.subcommand == "report") return cmd_report(opt, cfg);
    if (opt.subcommand == "dump") return cmd_dump(opt, cfg);
    usage_error("unknown subcommand '" + opt.subcommand + "'");
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "numaj/io.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20181114ULL;  // dataset vintage, documented in README

struct RunConfig {
  std::string params_path;
  std::string out_path;
  std::string format = "table";
  std::string alpha_spec = "0.01:2:0.01";
  std::uint64_t seed = kDefaultSeed;
  int grid = 101;
  int sigma = 1;
  double kappa_f = 1.0;
  double kappa_m = 1.0;
  double alpha_order = 1.0;
  bool bits = false;
  bool corrupt_omega = false;
};

numaj::ParamRanges resolve_ranges(const std::string& params_path) {
  if (!params_path.empty()) return numaj::load_param_ranges(params_path);
  if (const char* dir = std::getenv("NUMAJ_DATA_DIR")) {
    const std::string p = std::string(dir) + "/nufit_2018_11_normal.json";
    return numaj::load_param_ranges(p);
  }
  return numaj::nufit_2018_11_normal();
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw numaj::parse_error("cannot open output file '" + out_path + "'");
  f << text;
}

struct AlphaGrid {
  double start, stop, step;
};

AlphaGrid parse_alpha_spec(const std::string& spec) {
  AlphaGrid g{};
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw numaj::parse_error("--alpha expects start:stop:step, got '" + spec + "'");
  try {
    g.start = std::stod(spec.substr(0, c1));
    g.stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    g.step = std::stod(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw numaj::parse_error("--alpha expects numeric start:stop:step, got '" + spec + "'");
  }
  if (!(g.start > 0.0) || !(g.stop >= g.start) || !(g.step > 0.0))
    throw numaj::parse_error("--alpha needs 0 < start <= stop and step > 0");
  return g;
}

int run_report(const RunConfig& cfg, bool with_kappa, bool with_alpha_order) {
  const numaj::ParamRanges ranges = resolve_ranges(cfg.params_path);
  numaj::BoundReport report = numaj::bound_report_at(ranges.best_fit());
  if (with_alpha_order || with_kappa) {
    const numaj::OmegaVector omega = numaj::omega_direct_sum(report.zetas);
    report.bounds["alpha_order"] = cfg.alpha_order;
    report.bounds["tsallis_sum_at_alpha_order"] =
        numaj::tsallis_sum_bound(omega, cfg.alpha_order);
    if (with_kappa) {
      report.bounds["kappa_f"] = cfg.kappa_f;
      report.bounds["kappa_m"] = cfg.kappa_m;
      report.bounds["inefficiency_adjusted"] = numaj::inefficiency_bound(
          omega, numaj::Efficiency(cfg.kappa_f), numaj::Efficiency(cfg.kappa_m),
          cfg.alpha_order);
    }
  }
  if (cfg.format == "csv") {
    write_out(cfg.out_path, numaj::bound_report_csv(report, cfg.bits));
  } else if (cfg.format == "json") {
    write_out(cfg.out_path, numaj::bound_report_json(report, cfg.bits).dump(2) + "\n");
  } else {
    write_out(cfg.out_path, numaj::bound_report_table(report, cfg.bits));
  }
  return 0;
}

int run_figure1(const RunConfig& cfg) {
  const numaj::ParamRanges ranges = resolve_ranges(cfg.params_path);
  const AlphaGrid g = parse_alpha_spec(cfg.alpha_spec);
  const numaj::ZetaSequence zetas =
      numaj::zeta_sequence(numaj::build_pmns(ranges.best_fit()));
  const auto rows = numaj::bound_alpha_sweep(numaj::omega_direct_sum(zetas),
                                             numaj::omega_tensor_product(zetas), g.start,
                                             g.stop, g.step);
  write_out(cfg.out_path, numaj::alpha_sweep_csv(rows));
  return 0;
}

int run_verify(const RunConfig& cfg) {
  numaj::verify::VerifyOptions opt;
  opt.corrupt_omega = cfg.corrupt_omega;
  const numaj::verify::VerifyReport rep = numaj::verify::run_all(cfg.seed, opt);
  if (cfg.format == "json") {
    write_out(cfg.out_path, numaj::verify_report_json(rep).dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string csv = "suite,samples,checks,failures,worst\n";
    for (const auto& s : rep.suites) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.9e", s.worst_value);
      csv += s.name + "," + std::to_string(s.samples) + "," + std::to_string(s.checks) + "," +
             std::to_string(s.failures) + "," + buf + "\n";
    }
    write_out(cfg.out_path, csv);
  } else {
    write_out(cfg.out_path, numaj::verify::format_text(rep));
  }
  return rep.pass ? 0 : 4;
}

int run_scan(const RunConfig& cfg) {
  const numaj::ParamRanges ranges = resolve_ranges(cfg.params_path);
  numaj::ScanDocument doc;
  doc.sigma_level = cfg.sigma;
  doc.grid_points = cfg.grid;
  const numaj::GridSpec grid{cfg.grid};
  doc.eta = numaj::scan_eta(ranges, cfg.sigma, grid, cfg.seed);
  doc.zeta2 = numaj::scan_zeta2(ranges, cfg.sigma, grid, cfg.seed);
  if (cfg.format == "csv") {
    write_out(cfg.out_path, numaj::scan_csv(doc));
  } else if (cfg.format == "json") {
    write_out(cfg.out_path, numaj::scan_json(doc).dump(2) + "\n");
  } else {
    write_out(cfg.out_path, numaj::scan_text(doc));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numaj: majorization and entropic uncertainty-relation bounds for the "
      "flavor-mass basis pair of the PMNS mixing matrix"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--params", cfg.params_path,
                    "parameter-range file (JSON); default: built-in NuFit Nov 2018 dataset, "
                    "or $NUMAJ_DATA_DIR/nufit_2018_11_normal.json when the variable is set");
    cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  };
  auto add_common = [&](CLI::App* cmd) {
    add_io(cmd);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };

  CLI::App* rep = app.add_subcommand("report", "bound report at the best-fit point");
  add_common(rep);
  rep->add_option("--kappa-f", cfg.kappa_f, "flavor-detector efficiency in [0.5, 1]")
      ->check(CLI::Range(0.5, 1.0));
  rep->add_option("--kappa-m", cfg.kappa_m, "mass-detector efficiency in [0.5, 1]")
      ->check(CLI::Range(0.5, 1.0));
  rep->add_option("--alpha-order", cfg.alpha_order, "entropic order for the Tsallis bounds")
      ->check(CLI::PositiveNumber);
  rep->add_flag("--bits", cfg.bits,
                "display the Shannon-order bounds in bits (generalized-order "
                "Tsallis values stay in nats)");

  CLI::App* fig = app.add_subcommand(
      "figure1", "alpha sweep of the sum-type and product-type bounds (output is always CSV)");
  add_io(fig);
  fig->add_option("--alpha", cfg.alpha_spec, "alpha grid start:stop:step (default 0.01:2:0.01)");

  CLI::App* ver = app.add_subcommand("verify", "run all Monte-Carlo property suites");
  add_common(ver);
  ver->add_option("--seed", cfg.seed, "random seed (default 20181114)");
  ver->add_flag("--corrupt-omega", cfg.corrupt_omega,
                "self-test: corrupt omega so the suite must report a violation")
      ->group("");

  CLI::App* scn = app.add_subcommand("scan", "range scans for the eta and zeta_2 identifications");
  add_common(scn);
  scn->add_option("--sigma", cfg.sigma, "confidence region: 1 or 3")
      ->check(CLI::IsMember({1, 3}));
  scn->add_option("--grid", cfg.grid, "grid points per parameter (>= 50)")
      ->check(CLI::Range(50, 100000));
  scn->add_option("--seed", cfg.seed, "random seed (default 20181114)");

  try {
    app.parse(argc, argv);
    if (rep->parsed())
      return run_report(cfg, rep->count("--kappa-f") > 0 || rep->count("--kappa-m") > 0,
                        rep->count("--alpha-order") > 0);
    if (fig->parsed()) return run_figure1(cfg);
    if (ver->parsed()) return run_verify(cfg);
    if (scn->parsed()) return run_scan(cfg);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const numaj::property_violation& e) {
    std::fprintf(stderr, "property violation: %s\n", e.what());
    return 4;
  } catch (const numaj::invariant_error& e) {
    std::fprintf(stderr, "internal invariant violated: %s\n", e.what());
    return 3;
  } catch (const numaj::parse_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const numaj::argument_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const numaj::dimension_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}

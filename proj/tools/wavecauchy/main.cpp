#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/grid_io.hpp"
#include "wavecauchy/harness/run.hpp"
#include "wavecauchy/version.hpp"

namespace wh = wavecauchy::harness;

namespace {

// Exit codes: 0 all cases pass, 1 some case failed, 2 bad usage or config, 3 solver guard or evaluation error.
int execute(wh::Command command, const std::string& config_path, const std::string& out_path,
            const std::optional<std::uint64_t>& seed, const std::optional<int>& quad_nodes,
            const std::optional<double>& tol) {
  auto cfg = wh::load_config(config_path, command);
  std::string overrides;
  if (seed) {
    cfg.seed = *seed;
    overrides += "seed=" + std::to_string(*seed) + ";";
  }
  if (quad_nodes) {
    cfg.quadrature.nodes = *quad_nodes;
    overrides += "quad-nodes=" + std::to_string(*quad_nodes) + ";";
  }
  if (tol) {
    cfg.tol_override = *tol;
    overrides += "tol=" + wavecauchy::format_real(*tol) + ";";
  }
  cfg.hash = wh::fnv1a(overrides, cfg.hash);
  if (!out_path.empty()) cfg.output = out_path;

  const auto report = wh::run(cfg);
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    if (!out) throw wavecauchy::ConfigError("cannot write " + cfg.output->string(), {"--out"});
    report.write_csv(out);
  } else {
    report.write_csv(std::cout);
  }
  std::cerr << report.summary() << '\n';
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy problem for the n-dimensional wave equation: solvers and identity checks"};
  app.set_version_flag("--version", std::string(wavecauchy::kVersion));
  app.footer(wh::csv_columns_help());
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> quad_nodes;
  std::optional<double> tol;

  const std::vector<std::pair<wh::Command, const char*>> commands{
      {wh::Command::solve, "Point solves at probes and times, optionally against an oracle"},
      {wh::Command::verify_identities, "Random sweep of the sinc-kernel identities"},
      {wh::Command::verify_reduction, "Reduction formulas vs closed forms and Monte Carlo"},
      {wh::Command::constants, "c_n and d_n by three independent routes"},
      {wh::Command::converge, "Refinement ladder and observed order"},
  };
  for (const auto& [command, description] : commands) {
    auto* sub = app.add_subcommand(std::string(wh::to_string(command)), description);
    sub->add_option("--config", config_path, "INI configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "CSV output path (default: stdout)");
    sub->add_option("--seed", seed, "Random seed, overrides run.seed");
    sub->add_option("--quad-nodes", quad_nodes, "Base node count for 1-D rules and sphere latitudes")
        ->check(CLI::Range(2, 4096));
    sub->add_option("--tol", tol, "Override every tolerance")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto* chosen = app.get_subcommands().front();
  try {
    return execute(wh::parse_command(chosen->get_name()), config_path, out_path, seed, quad_nodes, tol);
  } catch (const wavecauchy::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    if (!e.keys().empty()) {
      std::cerr << "offending keys:";
      for (const auto& k : e.keys()) std::cerr << ' ' << k;
      std::cerr << '\n';
    }
    return 2;
  } catch (const wavecauchy::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

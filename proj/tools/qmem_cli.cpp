// qmem: sweeps, figure presets and self-checks from the command line.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 usage/config error,
// 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qmem/selfcheck.hpp"
#include "qmem/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfcheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SweepFlags {
  std::optional<double> lambda;
  std::vector<double> delta;
  std::optional<double> r;
  std::optional<double> theta;
  std::optional<double> t_max;
  std::optional<int> points;
  std::optional<std::string> quantities;
  std::optional<std::string> format;
  std::optional<std::string> engine;
  std::string output;
  std::string config;
  bool no_lamb_shift = false;
};

void add_grid_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--delta", f.delta, "Detuning in units of gamma (repeatable)");
  cmd->add_option("--t-max", f.t_max, "Final dimensionless time gamma*t");
  cmd->add_option("--points", f.points, "Number of time points (>= 2)");
  cmd->add_option("--quantities", f.quantities, "Comma list of absG,Gamma,concurrence,discord,eub,berta,lhs");
  cmd->add_option("--format", f.format, "csv or json");
  cmd->add_option("--engine", f.engine, "kraus (default) or master-equation");
  cmd->add_option("--output", f.output, "Output file (default: stdout)");
  cmd->add_flag("--no-lamb-shift", f.no_lamb_shift, "Master-equation engine without the Lamb-shift term");
}

void overlay(qmem::SweepConfig& cfg, const SweepFlags& f) {
  if (f.lambda) cfg.lambda_over_gamma = *f.lambda;
  if (!f.delta.empty()) cfg.delta_list = f.delta;
  if (f.r) cfg.r = *f.r;
  if (f.theta) cfg.theta = *f.theta;
  if (f.t_max) cfg.t_max = *f.t_max;
  if (f.points) cfg.n_points = *f.points;
  if (f.quantities) cfg.quantities = qmem::parse_quantity_list(*f.quantities);
  if (f.format) cfg.output_format = qmem::parse_output_format(*f.format);
  if (f.engine) cfg.engine = qmem::parse_engine(*f.engine);
  if (f.no_lamb_shift) cfg.lamb_shift = false;
}

int emit(const qmem::SweepConfig& cfg, const std::string& output) {
  const auto rows = qmem::run_sweep(cfg, qmem::threads_from_environment());
  // Render fully before touching the output file so failures leave no partial file.
  std::ostringstream buf;
  qmem::write_output(buf, cfg, rows);
  if (output.empty() || output == "-") {
    std::cout << buf.str();
    return std::cout ? kExitOk : kExitNumerical;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw qmem::ConfigError("cannot open output file '" + output + "'");
  out << buf.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit quantum-memory dynamics in a detuned Lorentzian cavity"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Sweep detuning x time and emit CSV/JSON rows");
  sweep->add_option("--lambda", sweep_flags.lambda, "Spectral width in units of gamma");
  sweep->add_option("--r", sweep_flags.r, "Purity weight r of the initial state");
  sweep->add_option("--theta", sweep_flags.theta, "Correlation angle theta (radians)");
  sweep->add_option("--config", sweep_flags.config, "JSON config file (flags override it)");
  add_grid_flags(sweep, sweep_flags);

  SweepFlags fig_flags;
  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "Run a figure preset (fig2, fig3, fig4, fig5)");
  figure->add_option("name", figure_name, "Preset name")->required();
  add_grid_flags(figure, fig_flags);

  bool sc_no_lamb = false;
  bool sc_fault = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suites");
  selfcheck->add_flag("--no-lamb-shift", sc_no_lamb, "Drop the Lamb-shift term from the master-equation oracle");
  selfcheck->add_flag("--inject-fault", sc_fault, "Test hook: push |G|^2 above 1 in the CPTP suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      qmem::SweepConfig cfg;
      if (!sweep_flags.config.empty()) qmem::apply_config_file(cfg, sweep_flags.config);
      overlay(cfg, sweep_flags);
      return emit(cfg, sweep_flags.output);
    }
    if (figure->parsed()) {
      qmem::SweepConfig cfg = qmem::figure_preset(figure_name);
      overlay(cfg, fig_flags);
      return emit(cfg, fig_flags.output);
    }
    qmem::SelfcheckOptions opts;
    opts.lamb_shift = !sc_no_lamb;
    if (sc_fault) opts.envelope_gain = 1.05;
    return qmem::print_selfcheck(std::cout, qmem::run_selfcheck(opts)) ? kExitOk : kExitSelfcheck;
  } catch (const qmem::ConfigError& e) {
    std::cerr << "qmem: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qmem::SweepFailure& e) {
    std::cerr << "qmem: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "qmem: " << e.what() << '\n';
    return kExitNumerical;
  }
}

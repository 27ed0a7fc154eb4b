#pragma once

// Parameter sweeps over (detuning, time), figure presets, and the CSV / JSON
// writers used by the command-line tool.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmem/errors.hpp"

namespace qmem {

/// Bad sweep configuration; maps to exit code 2.
class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Numerical failure at a specific grid point; maps to exit code 3.
class SweepFailure : public std::runtime_error {
 public:
  SweepFailure(double delta, double gamma_t, const std::string& what);

  double delta() const { return delta_; }
  double gamma_t() const { return gamma_t_; }

 private:
  double delta_;
  double gamma_t_;
};

enum class Quantity { AbsG, Gamma, Concurrence, Discord, Eub, Berta, Lhs };

/// Column name as written to CSV/JSON.
std::string_view quantity_name(Quantity q);
/// Throws ConfigError for unknown names.
Quantity parse_quantity(std::string_view name);

enum class OutputFormat { Csv, Json };
OutputFormat parse_output_format(std::string_view name);

/// How the evolved state is produced. The master-equation engine integrates
/// the time-local generator instead of applying the Kraus map.
enum class Engine { Kraus, MasterEquation };
Engine parse_engine(std::string_view name);

struct SweepConfig {
  double lambda_over_gamma = 10.0;
  std::vector<double> delta_list{0.0, 2.0, 5.0, 10.0};
  double r = 1.0;
  double theta = 0.7853981633974483;
  double t_max = 10.0;
  int n_points = 101;
  std::vector<Quantity> quantities{Quantity::AbsG,    Quantity::Gamma, Quantity::Concurrence, Quantity::Discord,
                                   Quantity::Eub,     Quantity::Berta, Quantity::Lhs};
  OutputFormat output_format = OutputFormat::Csv;
  Engine engine = Engine::Kraus;
  bool lamb_shift = true;  ///< master-equation engine only

  /// Throws ConfigError.
  void validate() const;
};

struct TimeSeriesRecord {
  double gamma_t = 0.0;
  double delta_over_gamma = 0.0;
  double lambda_over_gamma = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double abs_g = 0.0;
  double gamma_rate = 0.0;
  double concurrence = 0.0;
  double discord = 0.0;
  double eub = 0.0;
  double berta = 0.0;
  double lhs = 0.0;

  double value(Quantity q) const;
};

/// Uniform grid t_k = t_max k / (n_points - 1).
std::vector<double> time_grid(const SweepConfig& cfg);

/// Rows ordered by (delta, t). `threads` = 0 uses the hardware concurrency.
/// Throws ConfigError or SweepFailure.
std::vector<TimeSeriesRecord> run_sweep(const SweepConfig& cfg, unsigned threads = 1);

/// fig2 .. fig5; throws ConfigError for anything else.
SweepConfig figure_preset(std::string_view name);

/// Thread cap from EUB_THREADS (0 or unset: hardware concurrency).
unsigned threads_from_environment();

/// Fixed columns followed by the selected quantities in canonical order.
std::vector<std::string> output_columns(const SweepConfig& cfg);

/// 12 significant digits, '.' decimal point, LF line endings.
void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows);
void write_json(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows);
void write_output(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows);

/// Overlays keys from a JSON config file onto `cfg`. Recognised keys:
/// lambda, delta (number or array), r, theta, t_max, points, quantities
/// (array or comma list), format, engine, lamb_shift. Throws ConfigError.
void apply_config_file(SweepConfig& cfg, const std::string& path);

/// Parses a comma-separated quantity list.
std::vector<Quantity> parse_quantity_list(std::string_view csv);

}  // namespace qmem

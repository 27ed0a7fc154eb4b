#include "qmem/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "qmem/correlations.hpp"
#include "qmem/dynamics.hpp"
#include "qmem/uncertainty.hpp"

namespace qmem {

namespace {

constexpr std::string_view kFixedColumns[] = {"gamma_t", "delta_over_gamma", "lambda_over_gamma", "r", "theta"};

constexpr Quantity kCanonicalOrder[] = {Quantity::AbsG, Quantity::Gamma, Quantity::Concurrence, Quantity::Discord,
                                        Quantity::Eub,  Quantity::Berta, Quantity::Lhs};

std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  return fmt::format("{:.12g}", v);
}

std::vector<Quantity> selected_in_order(const SweepConfig& cfg) {
  std::vector<Quantity> out;
  for (Quantity q : kCanonicalOrder)
    if (std::find(cfg.quantities.begin(), cfg.quantities.end(), q) != cfg.quantities.end()) out.push_back(q);
  return out;
}

TimeSeriesRecord make_record(const SweepConfig& cfg, double delta, const DecayEnvelope& envlp,
                             const TwoQubitState& state) {
  TimeSeriesRecord rec;
  rec.gamma_t = envlp.t;
  rec.delta_over_gamma = delta;
  rec.lambda_over_gamma = cfg.lambda_over_gamma;
  rec.r = cfg.r;
  rec.theta = cfg.theta;
  rec.abs_g = std::sqrt(envlp.abs_g2);
  rec.gamma_rate = envlp.decay_rate;
  rec.concurrence = concurrence_x_state(state);
  rec.discord = discord_x_state(state);
  const UncertaintyReport u = eub(state);
  rec.eub = u.eub;
  rec.berta = u.berta;
  rec.lhs = u.lhs;
  return rec;
}

// Runs body(i) for i in [0, n) on up to `threads` workers. Exceptions are
// collected per index so the reported failure is the first in canonical
// order regardless of scheduling.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  std::vector<std::exception_ptr> errors(n);
  const auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

SweepFailure::SweepFailure(double delta, double gamma_t, const std::string& what)
    : std::runtime_error(fmt::format("numerical failure at delta = {}, gamma*t = {}: {}", delta, gamma_t, what)),
      delta_(delta),
      gamma_t_(gamma_t) {}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::AbsG: return "absG";
    case Quantity::Gamma: return "Gamma";
    case Quantity::Concurrence: return "concurrence";
    case Quantity::Discord: return "discord";
    case Quantity::Eub: return "eub";
    case Quantity::Berta: return "berta";
    case Quantity::Lhs: return "lhs";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : kCanonicalOrder)
    if (quantity_name(q) == name) return q;
  throw ConfigError("unknown quantity '" + std::string(name) + "'");
}

std::vector<Quantity> parse_quantity_list(std::string_view csv) {
  std::vector<Quantity> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    std::string_view item = csv.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_quantity(item));
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("quantity list must not be empty");
  return out;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

Engine parse_engine(std::string_view name) {
  if (name == "kraus") return Engine::Kraus;
  if (name == "master-equation") return Engine::MasterEquation;
  throw ConfigError("unknown engine '" + std::string(name) + "' (expected kraus or master-equation)");
}

void SweepConfig::validate() const {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(lambda_over_gamma) || lambda_over_gamma <= 0.0) throw ConfigError("lambda must be a positive number");
  if (delta_list.empty()) throw ConfigError("delta list must not be empty");
  for (double d : delta_list)
    if (!finite(d)) throw ConfigError("delta values must be finite");
  if (!finite(r) || r < 0.0 || r > 1.0) throw ConfigError("r must lie in [0, 1]");
  if (!finite(theta)) throw ConfigError("theta must be finite");
  if (!finite(t_max) || t_max <= 0.0) throw ConfigError("t_max must be > 0");
  if (n_points < 2) throw ConfigError("points must be >= 2");
  if (quantities.empty()) throw ConfigError("at least one quantity must be selected");
}

double TimeSeriesRecord::value(Quantity q) const {
  switch (q) {
    case Quantity::AbsG: return abs_g;
    case Quantity::Gamma: return gamma_rate;
    case Quantity::Concurrence: return concurrence;
    case Quantity::Discord: return discord;
    case Quantity::Eub: return eub;
    case Quantity::Berta: return berta;
    case Quantity::Lhs: return lhs;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> time_grid(const SweepConfig& cfg) {
  std::vector<double> t(static_cast<std::size_t>(cfg.n_points));
  const double last = static_cast<double>(cfg.n_points - 1);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = cfg.t_max * static_cast<double>(k) / last;
  t.back() = cfg.t_max;
  return t;
}

std::vector<TimeSeriesRecord> run_sweep(const SweepConfig& cfg, unsigned threads) {
  cfg.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<double> times = time_grid(cfg);
  const std::size_t nt = times.size();
  const InitialStateParams init{cfg.r, cfg.theta};
  const TwoQubitState state0 = initial_state(init);

  std::vector<TimeSeriesRecord> rows(cfg.delta_list.size() * nt);
  if (cfg.engine == Engine::Kraus) {
    parallel_for(rows.size(), threads, [&](std::size_t i) {
      const double delta = cfg.delta_list[i / nt];
      const double t = times[i % nt];
      try {
        const EnvironmentParams env{1.0, cfg.lambda_over_gamma, delta};
        const DecayEnvelope envlp = envelope(env, t);
        rows[i] = make_record(cfg, delta, envlp, evolve(state0, kraus_pair(envlp)));
      } catch (const std::exception& e) {
        throw SweepFailure(delta, t, e.what());
      }
    });
  } else {
    parallel_for(cfg.delta_list.size(), threads, [&](std::size_t d) {
      const double delta = cfg.delta_list[d];
      const EnvironmentParams env{1.0, cfg.lambda_over_gamma, delta};
      MasterEquationOptions opts;
      opts.lamb_shift = cfg.lamb_shift;
      std::vector<Mat4> traj;
      try {
        traj = master_equation_trajectory(state0, env, times, opts);
      } catch (const std::exception& e) {
        throw SweepFailure(delta, cfg.t_max, e.what());
      }
      for (std::size_t k = 0; k < nt; ++k) {
        try {
          rows[d * nt + k] = make_record(cfg, delta, envelope(env, times[k]), TwoQubitState(traj[k]));
        } catch (const std::exception& e) {
          throw SweepFailure(delta, times[k], e.what());
        }
      }
    });
  }
  return rows;
}

SweepConfig figure_preset(std::string_view name) {
  SweepConfig cfg;
  if (name == "fig2" || name == "fig3") {
    cfg.lambda_over_gamma = 10.0;
    cfg.t_max = 10.0;
    cfg.n_points = 401;
  } else if (name == "fig4" || name == "fig5") {
    cfg.lambda_over_gamma = 0.1;
    cfg.t_max = 50.0;
    cfg.n_points = 1001;
  } else {
    throw ConfigError("unknown figure '" + std::string(name) + "' (expected fig2, fig3, fig4 or fig5)");
  }
  if (name == "fig2" || name == "fig4")
    cfg.quantities = {Quantity::Concurrence, Quantity::Discord};
  else
    cfg.quantities = {Quantity::Eub, Quantity::Berta, Quantity::Lhs};
  return cfg;
}

unsigned threads_from_environment() {
  const char* v = std::getenv("EUB_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0) throw ConfigError("EUB_THREADS must be a non-negative integer");
  return static_cast<unsigned>(n);
}

std::vector<std::string> output_columns(const SweepConfig& cfg) {
  std::vector<std::string> cols(std::begin(kFixedColumns), std::end(kFixedColumns));
  for (Quantity q : selected_in_order(cfg)) cols.emplace_back(quantity_name(q));
  return cols;
}

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows) {
  const std::vector<Quantity> qs = selected_in_order(cfg);
  std::string line;
  const std::vector<std::string> cols = output_columns(cfg);
  for (std::size_t i = 0; i < cols.size(); ++i) line += (i ? "," : "") + cols[i];
  os << line << '\n';
  for (const TimeSeriesRecord& rec : rows) {
    line = fmt_double(rec.gamma_t) + ',' + fmt_double(rec.delta_over_gamma) + ',' + fmt_double(rec.lambda_over_gamma) +
           ',' + fmt_double(rec.r) + ',' + fmt_double(rec.theta);
    for (Quantity q : qs) line += ',' + fmt_double(rec.value(q));
    os << line << '\n';
  }
}

void write_json(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows) {
  const std::vector<Quantity> qs = selected_in_order(cfg);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TimeSeriesRecord& rec : rows) {
    nlohmann::ordered_json row;
    row["gamma_t"] = rec.gamma_t;
    row["delta_over_gamma"] = rec.delta_over_gamma;
    row["lambda_over_gamma"] = rec.lambda_over_gamma;
    row["r"] = rec.r;
    row["theta"] = rec.theta;
    for (Quantity q : qs) row[std::string(quantity_name(q))] = rec.value(q);
    arr.push_back(std::move(row));
  }
  os << arr.dump(1) << '\n';
}

void write_output(std::ostream& os, const SweepConfig& cfg, const std::vector<TimeSeriesRecord>& rows) {
  if (cfg.output_format == OutputFormat::Json)
    write_json(os, cfg, rows);
  else
    write_csv(os, cfg, rows);
}

void apply_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "lambda") {
        cfg.lambda_over_gamma = v.get<double>();
      } else if (key == "delta") {
        cfg.delta_list = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
      } else if (key == "r") {
        cfg.r = v.get<double>();
      } else if (key == "theta") {
        cfg.theta = v.get<double>();
      } else if (key == "t_max") {
        cfg.t_max = v.get<double>();
      } else if (key == "points") {
        cfg.n_points = v.get<int>();
      } else if (key == "quantities") {
        if (v.is_array()) {
          cfg.quantities.clear();
          for (const auto& q : v) cfg.quantities.push_back(parse_quantity(q.get<std::string>()));
        } else {
          cfg.quantities = parse_quantity_list(v.get<std::string>());
        }
      } else if (key == "format") {
        cfg.output_format = parse_output_format(v.get<std::string>());
      } else if (key == "engine") {
        cfg.engine = parse_engine(v.get<std::string>());
      } else if (key == "lamb_shift") {
        cfg.lamb_shift = v.get<bool>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

}  // namespace qmem

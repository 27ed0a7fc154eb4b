#include "qmem/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include <fmt/format.h>

#include "qmem/correlations.hpp"
#include "qmem/dynamics.hpp"
#include "qmem/sampling.hpp"
#include "qmem/sweep.hpp"
#include "qmem/uncertainty.hpp"

namespace qmem {

namespace {

using sampling::Rng;

struct Regime {
  double lambda;
  double t_max;
};

constexpr Regime kRegimes[] = {{10.0, 10.0}, {0.1, 50.0}};
constexpr double kDetunings[] = {0.0, 5.0, 10.0};
constexpr double kBellAngle = 0.7853981633974483;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

SuiteResult complementarity_suite() {
  const double c = complementarity(Observable::SigmaX, Observable::SigmaZ);
  return {"complementarity", std::abs(c - 0.5) < 1e-12, fmt::format("c(sigma_x, sigma_z) = {:.15g}", c)};
}

SuiteResult cptp_suite(const SelfcheckOptions& opts) {
  Rng rng(101);
  double worst_completeness = 0.0, worst_trace = 0.0, worst_herm = 0.0, worst_neg = 0.0;
  try {
    for (int i = 0; i < 200; ++i) {
      const EnvironmentParams env = sampling::random_environment(rng);
      DecayEnvelope envlp = envelope(env, uniform(rng, 0.0, 50.0));
      envlp.g *= opts.envelope_gain;
      envlp.abs_g2 = std::norm(envlp.g);
      const KrausPair kp = kraus_pair(envlp);
      const Mat2 sum = kp.k1.adjoint() * kp.k1 + kp.k2.adjoint() * kp.k2;
      worst_completeness = std::max(worst_completeness, max_abs_diff(sum, Mat2::identity()));

      const TwoQubitState s0 = sampling::random_two_qubit_state(rng);
      const TwoQubitState s1 = evolve(s0, kp);
      worst_trace = std::max(worst_trace, std::abs(s1.matrix().trace() - 1.0));
      worst_herm = std::max(worst_herm, hermiticity_defect(s1.matrix()));
      worst_neg = std::min(worst_neg, eig_hermitian(s1.matrix()).values.back());
    }
  } catch (const std::exception& e) {
    return {"cptp", false, e.what()};
  }
  const bool ok = worst_completeness < 1e-10 && worst_trace < 1e-10 && worst_herm < 1e-12 && worst_neg >= -1e-9;
  return {"cptp", ok,
          fmt::format("completeness {:.2e}, trace {:.2e}, hermiticity {:.2e}, min eigenvalue {:.2e}",
                      worst_completeness, worst_trace, worst_herm, worst_neg)};
}

SuiteResult closed_form_suite() {
  Rng rng(202);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const InitialStateParams p = sampling::random_initial_params(rng);
    const EnvironmentParams env = sampling::random_environment(rng);
    const DecayEnvelope envlp = envelope(env, uniform(rng, 0.0, 50.0));
    const TwoQubitState a = analytic_x_state(p, envlp);
    const TwoQubitState b = evolve(initial_state(p), kraus_pair(envlp));
    worst = std::max(worst, max_abs_diff(a.matrix(), b.matrix()));
  }
  return {"closed-form-vs-channel", worst < 1e-12, fmt::format("max deviation {:.2e}", worst)};
}

SuiteResult volterra_suite() {
  double worst = 0.0;
  try {
    for (const Regime& reg : kRegimes)
      for (double delta : kDetunings) {
        const EnvironmentParams env{1.0, reg.lambda, delta};
        const VolterraSeries v = volterra_oracle(env, reg.t_max);
        for (std::size_t k = 0; k < v.values.size(); ++k)
          worst = std::max(worst, std::abs(v.values[k] - envelope(env, v.time(k)).g));
      }
  } catch (const std::exception& e) {
    return {"volterra-oracle", false, e.what()};
  }
  return {"volterra-oracle", worst < 1e-5, fmt::format("max |G - c| = {:.2e}", worst)};
}

std::vector<SuiteResult> master_equation_suites(const SelfcheckOptions& opts) {
  double worst_pop = 0.0, worst_coh = 0.0;
  const TwoQubitState bell = initial_state({1.0, kBellAngle});
  try {
    for (const Regime& reg : kRegimes)
      for (double delta : kDetunings) {
        const EnvironmentParams env{1.0, reg.lambda, delta};
        std::vector<double> times;
        for (int k = 1; k <= static_cast<int>(reg.t_max); ++k) times.push_back(k);
        MasterEquationOptions me;
        me.lamb_shift = opts.lamb_shift;
        const std::vector<Mat4> traj = master_equation_trajectory(bell, env, times, me);
        for (std::size_t k = 0; k < times.size(); ++k) {
          const Mat4 exact = evolve(bell, kraus_pair(envelope(env, times[k]))).matrix();
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
              double& slot = (i == j) ? worst_pop : worst_coh;
              slot = std::max(slot, std::abs(exact(i, j) - traj[k](i, j)));
            }
        }
      }
  } catch (const std::exception& e) {
    return {{"master-equation-populations", false, e.what()}, {"master-equation-coherences", false, e.what()}};
  }
  const std::string suffix = opts.lamb_shift ? "" : " (Lamb shift disabled)";
  return {{"master-equation-populations", worst_pop < 1e-6, fmt::format("max deviation {:.2e}{}", worst_pop, suffix)},
          {"master-equation-coherences", worst_coh < 1e-6, fmt::format("max deviation {:.2e}{}", worst_coh, suffix)}};
}

SuiteResult discord_suite() {
  Rng rng(303);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const InitialStateParams p = sampling::random_initial_params(rng);
    const EnvironmentParams env = sampling::random_environment(rng);
    const TwoQubitState s = analytic_x_state(p, envelope(env, uniform(rng, 0.0, 50.0)));
    worst = std::max(worst, std::abs(discord_x_state(s) - discord_oracle(s)));
  }
  return {"discord-oracle", worst < 1e-4, fmt::format("max |closed form - oracle| = {:.2e}", worst)};
}

SuiteResult sandwich_suite() {
  Rng rng(404);
  double worst = 0.0;
  const auto check = [&](const UncertaintyReport& u) {
    worst = std::max({worst, u.eub - u.lhs, u.berta - u.eub});
  };
  for (int i = 0; i < 200; ++i) check(eub(sampling::random_two_qubit_state(rng)));
  for (const char* fig : {"fig2", "fig4"}) {
    for (const TimeSeriesRecord& rec : run_sweep(figure_preset(fig))) {
      worst = std::max({worst, rec.eub - rec.lhs, rec.berta - rec.eub});
    }
  }
  return {"inequality-sandwich", worst <= 1e-9, fmt::format("max violation {:.2e}", worst)};
}

SuiteResult monotonicity_suite() {
  double worst = 0.0;
  std::string where = "none";
  for (const char* fig : {"fig2", "fig4"}) {
    const SweepConfig cfg = figure_preset(fig);
    const std::vector<TimeSeriesRecord> rows = run_sweep(cfg);
    const std::size_t nt = static_cast<std::size_t>(cfg.n_points);
    for (std::size_t d = 1; d < cfg.delta_list.size(); ++d)
      for (std::size_t k = 0; k < nt; ++k) {
        const TimeSeriesRecord& lo = rows[(d - 1) * nt + k];
        const TimeSeriesRecord& hi = rows[d * nt + k];
        const double v = std::max({lo.concurrence - hi.concurrence, lo.discord - hi.discord, hi.eub - lo.eub});
        if (v > worst) {
          worst = v;
          where = fmt::format("{} delta {} -> {} at gamma*t = {}", fig, lo.delta_over_gamma, hi.delta_over_gamma,
                              lo.gamma_t);
        }
      }
  }
  return {"detuning-monotonicity", worst <= 1e-6, fmt::format("max violation {:.2e} ({})", worst, where)};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opts) {
  std::vector<SuiteResult> out;
  const auto guarded = [&](const char* name, const std::function<SuiteResult()>& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  guarded("complementarity", complementarity_suite);
  guarded("cptp", [&] { return cptp_suite(opts); });
  guarded("closed-form-vs-channel", closed_form_suite);
  guarded("volterra-oracle", volterra_suite);
  for (SuiteResult& r : master_equation_suites(opts)) out.push_back(std::move(r));
  guarded("discord-oracle", discord_suite);
  guarded("inequality-sandwich", sandwich_suite);
  guarded("detuning-monotonicity", monotonicity_suite);
  return out;
}

bool print_selfcheck(std::ostream& os, const std::vector<SuiteResult>& results) {
  bool all = true;
  for (const SuiteResult& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  os << (all ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  return all;
}

}  // namespace qmem

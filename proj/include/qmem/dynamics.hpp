#pragma once

// Memory qubit B coupled to a detuned Lorentzian cavity, single excitation.
//
// The excited-state amplitude evolves as c(t) = G(t) c(0). All rates are in
// the same unit as `gamma`; with the default gamma = 1, times are the
// dimensionless gamma*t used on every figure axis.
//
// Basis convention: |0> is the excited state of B, |1> the ground state, so
// the amplitude-damping Kraus pair is K1 = diag(G, 1), K2 = sqrt(1-|G|^2)|1><0|.

#include <vector>

#include "qmem/qmath.hpp"

namespace qmem {

struct EnvironmentParams {
  double gamma = 1.0;  ///< coupling rate, sets the unit
  double lambda = 1.0; ///< spectral width
  double delta = 0.0;  ///< detuning omega_0 - omega_c

  /// Throws InvalidInput unless gamma > 0, lambda > 0 and all are finite.
  void validate() const;
};

struct InitialStateParams {
  double r = 1.0;      ///< weight of the pure component, in [0, 1]
  double theta = 0.0;  ///< correlation angle of cos(theta)|00> + sin(theta)|11>

  void validate() const;
};

struct DecayEnvelope {
  double t = 0.0;
  Complex g{1.0, 0.0};
  double abs_g2 = 1.0;
  double decay_rate = 0.0;  ///< Gamma(t) = -2 Re(G'/G)
  double lamb_shift = 0.0;  ///< -2 Im(G'/G)
};

struct KrausPair {
  Mat2 k1;
  Mat2 k2;
};

/// sqrt((lambda - i delta)^2 - 2 gamma lambda), principal branch.
Complex big_omega(const EnvironmentParams& env);

/// Closed-form G(t), Gamma(t) and Lamb-shift rate. Finite for all t >= 0,
/// including Omega = 0 and large t.
DecayEnvelope envelope(const EnvironmentParams& env, double t);

/// G'(t) from the closed form.
Complex envelope_derivative(const EnvironmentParams& env, double t);

/// Same closed form evaluated with an explicitly supplied Omega branch; used to
/// check that G does not depend on the sign of the square root.
Complex envelope_amplitude_with_branch(const EnvironmentParams& env, Complex omega, double t);

/// f(tau) = (gamma lambda / 2) exp(-(lambda - i delta) tau).
Complex correlation_kernel(const EnvironmentParams& env, double tau);

/// J as a function of omega_0 - omega: Lorentzian of half-width lambda
/// centred at the detuning.
double spectral_density(const EnvironmentParams& env, double omega_offset);

/// Throws InvalidEnvelope if |G|^2 > 1 + 1e-10.
KrausPair kraus_pair(const DecayEnvelope& envlp);

TwoQubitState initial_state(const InitialStateParams& p);

/// Applies the channel to the memory qubit only: sum_a (I x K_a) rho (I x K_a)^+.
TwoQubitState evolve(const TwoQubitState& state0, const KrausPair& kp);

/// Element formulas for the evolved X-state; uses 1 - |G|^2 for the
/// decayed population so that it agrees with `evolve`.
TwoQubitState analytic_x_state(const InitialStateParams& p, const DecayEnvelope& envlp);

// ---------------------------------------------------------------------------
// Numerical oracles

struct MasterEquationOptions {
  double dt = 1e-3;
  bool lamb_shift = true;
  /// Max-norm change allowed when the step is halved.
  double halving_tolerance = 1e-8;
  /// Half-width of the window used to step across zeros of G.
  double pole_window = 0.02;
};

/// Integrates the time-local master equation for B (dissipator with rate
/// Gamma(t), plus the Lamb-shift Hamiltonian unless disabled) with fixed-step
/// RK4 and returns the state at each of `times` (non-decreasing, >= 0).
/// Runs at dt and dt/2 and throws IntegrationFailure if they disagree by more
/// than the halving tolerance; the dt/2 result is returned.
std::vector<Mat4> master_equation_trajectory(const TwoQubitState& state0, const EnvironmentParams& env,
                                             const std::vector<double>& times,
                                             const MasterEquationOptions& opts = {});

TwoQubitState master_equation_oracle(const TwoQubitState& state0, const EnvironmentParams& env,
                                     double t_end, const MasterEquationOptions& opts = {});

struct VolterraOptions {
  /// Coarse step; <= 0 picks 0.03 / max(1, |lambda - i delta| / gamma).
  double dt = 0.0;
  double halving_tolerance = 1e-4;
};

struct VolterraSeries {
  double dt = 0.0;
  std::vector<Complex> values;  ///< c(k dt), k = 0..n

  double time(std::size_t k) const { return static_cast<double>(k) * dt; }
};

/// Solves c'(t) = -int_0^t f(t - s) c(s) ds, c(0) = 1, by trapezoidal
/// convolution with a trapezoidal predictor-corrector step. The step is
/// halved once; the two solutions are Richardson-combined on the coarse grid
/// and their difference is the convergence check.
VolterraSeries volterra_oracle(const EnvironmentParams& env, double t_end, const VolterraOptions& opts = {});

}  // namespace qmem

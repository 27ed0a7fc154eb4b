#include "qmem/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace qmem {

namespace {

Complex detuned_width(const EnvironmentParams& env) { return {env.lambda, -env.delta}; }

// (1 - exp(-omega t)) / omega, continuous through omega = 0.
Complex one_minus_exp_over(Complex omega, double t) {
  const Complex x = omega * t;
  if (std::abs(x) < 1e-3) {
    // t (1 - x/2 + x^2/6 - x^3/24 + x^4/120)
    return t * (1.0 + x * (-1.0 / 2.0 + x * (1.0 / 6.0 + x * (-1.0 / 24.0 + x / 120.0))));
  }
  return (1.0 - std::exp(-x)) / omega;
}

struct EnvelopeParts {
  Complex g;
  Complex g_dot;
  Complex log_derivative;  // G'/G
};

// With E = exp(-Omega t) and phi = (1 - E)/Omega:
//   G  = exp((Omega - a) t / 2) [(1 + E) + a phi] / 2
//   G' = -gamma lambda exp((Omega - a) t / 2) phi / 2
// which avoids cosh/sinh overflow for Re(Omega) t large and the 0/0 at Omega = 0.
EnvelopeParts envelope_parts(const EnvironmentParams& env, double t) {
  const Complex a = detuned_width(env);
  const Complex omega = big_omega(env);
  const Complex e = std::exp(-omega * t);
  const Complex phi = one_minus_exp_over(omega, t);
  const Complex prefactor = std::exp((omega - a) * (t / 2.0));
  const Complex bracket = (1.0 + e) + a * phi;
  const double gl = env.gamma * env.lambda;
  EnvelopeParts p;
  p.g = 0.5 * prefactor * bracket;
  p.g_dot = -0.5 * gl * prefactor * phi;
  p.log_derivative = -gl * phi / bracket;
  return p;
}

}  // namespace

void EnvironmentParams::validate() const {
  if (!std::isfinite(gamma) || !std::isfinite(lambda) || !std::isfinite(delta))
    throw InvalidInput("EnvironmentParams: non-finite parameter");
  if (gamma <= 0.0) throw InvalidInput("EnvironmentParams: gamma must be > 0");
  if (lambda <= 0.0) throw InvalidInput("EnvironmentParams: lambda must be > 0");
}

void InitialStateParams::validate() const {
  if (!std::isfinite(r) || !std::isfinite(theta)) throw InvalidInput("InitialStateParams: non-finite parameter");
  if (r < 0.0 || r > 1.0) throw InvalidInput("InitialStateParams: r must lie in [0, 1]");
}

Complex big_omega(const EnvironmentParams& env) {
  const Complex a = detuned_width(env);
  Complex w = std::sqrt(a * a - 2.0 * env.gamma * env.lambda);
  // std::sqrt already returns Re >= 0; pin the Re == 0 case to Im >= 0.
  if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
  return w;
}

DecayEnvelope envelope(const EnvironmentParams& env, double t) {
  env.validate();
  if (!(t >= 0.0)) throw InvalidInput("envelope: t must be >= 0");
  const EnvelopeParts p = envelope_parts(env, t);
  DecayEnvelope out;
  out.t = t;
  out.g = p.g;
  out.abs_g2 = std::norm(p.g);
  out.decay_rate = -2.0 * p.log_derivative.real();
  out.lamb_shift = -2.0 * p.log_derivative.imag();
  return out;
}

Complex envelope_derivative(const EnvironmentParams& env, double t) {
  env.validate();
  return envelope_parts(env, t).g_dot;
}

Complex envelope_amplitude_with_branch(const EnvironmentParams& env, Complex omega, double t) {
  env.validate();
  const Complex a = detuned_width(env);
  const Complex half = omega * (t / 2.0);
  return std::exp(-a * (t / 2.0)) * (std::cosh(half) + a / omega * std::sinh(half));
}

Complex correlation_kernel(const EnvironmentParams& env, double tau) {
  env.validate();
  if (!(tau >= 0.0)) throw InvalidInput("correlation_kernel: tau must be >= 0");
  return 0.5 * env.gamma * env.lambda * std::exp(-detuned_width(env) * tau);
}

double spectral_density(const EnvironmentParams& env, double omega_offset) {
  env.validate();
  const double x = omega_offset - env.delta;
  return env.gamma * env.lambda * env.lambda / (2.0 * std::numbers::pi * (x * x + env.lambda * env.lambda));
}

KrausPair kraus_pair(const DecayEnvelope& envlp) {
  if (!(envlp.abs_g2 <= 1.0 + 1e-10))
    throw InvalidEnvelope("kraus_pair: |G|^2 = " + std::to_string(envlp.abs_g2) + " exceeds 1");
  const double damping = std::sqrt(std::max(0.0, 1.0 - envlp.abs_g2));
  KrausPair kp;
  kp.k1 = Mat2{envlp.g, 0.0, 0.0, 1.0};
  kp.k2 = Mat2{0.0, 0.0, damping, 0.0};
  return kp;
}

TwoQubitState initial_state(const InitialStateParams& p) {
  p.validate();
  const std::array<double, 4> psi{std::cos(p.theta), 0.0, 0.0, std::sin(p.theta)};
  Mat4 rho;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = p.r * psi[i] * psi[j];
    rho(i, i) += (1.0 - p.r) / 4.0;
  }
  return TwoQubitState(rho);
}

TwoQubitState evolve(const TwoQubitState& state0, const KrausPair& kp) {
  const Mat2 id = Mat2::identity();
  Mat4 out;
  for (const Mat2* k : {&kp.k1, &kp.k2}) {
    const Mat4 op = kron(id, *k);
    out += op * state0.matrix() * op.adjoint();
  }
  return TwoQubitState(out);
}

TwoQubitState analytic_x_state(const InitialStateParams& p, const DecayEnvelope& envlp) {
  p.validate();
  const double g2 = envlp.abs_g2;
  const double r = p.r;
  const double c2 = std::cos(2.0 * p.theta);
  const double lost = 1.0 - g2;
  Mat4 rho;
  rho(0, 0) = 0.25 * g2 * (1.0 + r + 2.0 * r * c2);
  rho(1, 1) = 0.25 * (1.0 - r + lost * (1.0 + r + 2.0 * r * c2));
  rho(2, 2) = 0.25 * g2 * (1.0 - r);
  rho(3, 3) = 0.25 * (1.0 + r + (1.0 - r) * lost - 2.0 * r * c2);
  rho(0, 3) = envlp.g * r * std::cos(p.theta) * std::sin(p.theta);
  rho(3, 0) = std::conj(rho(0, 3));
  return TwoQubitState(rho);
}

}  // namespace qmem

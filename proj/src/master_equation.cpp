// Time-local master equation for the memory qubit, integrated with RK4.
//
// Where G(t) has an exact zero the decay rate has a simple pole and the
// generator is undefined at that instant. Because the generator at any time is
// Gamma(t) D + S(t) H with [D, H] = 0, the propagator over a window around the
// zero is exp(A D + B H) with A, B the principal-value integrals of Gamma and
// S; the simple zero contributes an extra sign on the B coherences. The
// integrator steps across each zero with that propagator.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qmem/dynamics.hpp"

namespace qmem {

namespace {

constexpr std::size_t kExcited = 0;
constexpr std::size_t kGround = 1;

constexpr std::size_t idx(std::size_t a, std::size_t b) { return 2 * a + b; }

struct Rates {
  double decay;
  double lamb;
};

Rates rates_at(const EnvironmentParams& env, double t, bool lamb_shift) {
  const DecayEnvelope e = envelope(env, t);
  return {e.decay_rate, lamb_shift ? e.lamb_shift : 0.0};
}

// Gamma (L rho L^+ - {n, rho}/2) - i (S/2) [n, rho] with L = sigma_-, n = |0><0|
// acting on B.
Mat4 generator(const Mat4& rho, Rates k) {
  Mat4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double ni = (i % 2 == kExcited) ? 1.0 : 0.0;
      const double nj = (j % 2 == kExcited) ? 1.0 : 0.0;
      out(i, j) = -0.5 * k.decay * (ni + nj) * rho(i, j) - Complex(0.0, 0.5 * k.lamb) * (ni - nj) * rho(i, j);
    }
  }
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap) out(idx(a, kGround), idx(ap, kGround)) += k.decay * rho(idx(a, kExcited), idx(ap, kExcited));
  return out;
}

Mat4 rk4_step(const Mat4& rho, const EnvironmentParams& env, double t, double h, bool lamb) {
  const Rates r0 = rates_at(env, t, lamb);
  const Rates rm = rates_at(env, t + 0.5 * h, lamb);
  const Rates r1 = rates_at(env, t + h, lamb);
  const Mat4 k1 = generator(rho, r0);
  const Mat4 k2 = generator(rho + k1 * (0.5 * h), rm);
  const Mat4 k3 = generator(rho + k2 * (0.5 * h), rm);
  const Mat4 k4 = generator(rho + k3 * h, r1);
  return rho + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

// Gauss-Legendre nodes/weights on [0, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Quadrature& gauss_legendre_unit() {
  static const Quadrature q = [] {
    constexpr int n = 16;
    Quadrature out;
    for (int i = 1; i <= n; ++i) {
      double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      out.nodes.push_back(0.5 * (1.0 + x));
      out.weights.push_back(1.0 / ((1.0 - x * x) * dp * dp));
    }
    return out;
  }();
  return q;
}

// Zeros of G on (0, t_max]: bracketed by a phase jump of more than 90 degrees
// between scan points, then polished by Gauss-Newton on |G|^2.
std::vector<double> amplitude_zeros(const EnvironmentParams& env, double t_max) {
  std::vector<double> zeros;
  const double scan = 0.01;
  Complex prev = envelope(env, 0.0).g;
  for (double t = scan; t <= t_max + scan; t += scan) {
    const Complex cur = envelope(env, t).g;
    if ((prev * std::conj(cur)).real() <= 0.0) {
      double z = t - 0.5 * scan;
      for (int iter = 0; iter < 60; ++iter) {
        const Complex g = envelope(env, z).g;
        const Complex gd = envelope_derivative(env, z);
        const double step = (std::conj(gd) * g).real() / std::norm(gd);
        z -= step;
        if (std::abs(step) < 1e-15) break;
      }
      if (std::abs(envelope(env, z).g) < 1e-10 && z > 0.0 && z <= t_max + scan &&
          (zeros.empty() || z - zeros.back() > 10 * scan))
        zeros.push_back(z);
    }
    prev = cur;
  }
  return zeros;
}

// Moves the fraction 1 - survive of the excited B population to the ground
// state and multiplies the excited/ground coherences by coh.
Mat4 apply_damping(const Mat4& rho, double survive, Complex coh) {
  Mat4 out = rho;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t ap = 0; ap < 2; ++ap) {
      const Complex ee = rho(idx(a, kExcited), idx(ap, kExcited));
      out(idx(a, kExcited), idx(ap, kExcited)) = ee * survive;
      out(idx(a, kGround), idx(ap, kGround)) += ee * (1.0 - survive);
      out(idx(a, kExcited), idx(ap, kGround)) *= coh;
      out(idx(a, kGround), idx(ap, kExcited)) *= std::conj(coh);
    }
  }
  return out;
}

// Exact propagator across [t0 - w, t0 + w] when G(t0) = 0.
Mat4 cross_zero(const Mat4& rho, const EnvironmentParams& env, double t0, double w, bool lamb) {
  const Quadrature& q = gauss_legendre_unit();
  double a_int = 0.0, b_int = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double s = w * q.nodes[i];
    const Rates plus = rates_at(env, t0 + s, lamb);
    const Rates minus = rates_at(env, t0 - s, lamb);
    a_int += w * q.weights[i] * (plus.decay + minus.decay);
    b_int += w * q.weights[i] * (plus.lamb + minus.lamb);
  }
  return apply_damping(rho, std::exp(-a_int), -std::exp(Complex(-0.5 * a_int, -0.5 * b_int)));
}

class Integrator {
 public:
  Integrator(const EnvironmentParams& env, double h, const MasterEquationOptions& opts, std::vector<double> zeros)
      : env_(env), h_(h), opts_(opts), zeros_(std::move(zeros)) {}

  // Advance across a stretch that contains no zero of G in its interior.
  Mat4 advance_regular(Mat4 rho, double from, double to) const {
    double t = from;
    while (t < to) {
      const double dist = distance_to_zero(t);
      // Steps shrink linearly near a zero but still scale with h, so halving h
      // halves every step.
      const double step = std::min(to - t, h_ * std::clamp(dist / kGradingScale, 0.05, 1.0));
      rho = rk4_step(rho, env_, t, step, opts_.lamb_shift);
      t += step;
      if (to - t < 1e-14) t = to;
    }
    return rho;
  }

  std::vector<Mat4> run(const Mat4& rho0, const std::vector<double>& times) const {
    const std::vector<double> widths = windows(times);
    std::vector<Mat4> out;
    out.reserve(times.size());
    Mat4 rho = rho0;
    double t = 0.0;
    std::size_t k = 0;
    for (double target : times) {
      while (k < zeros_.size() && zeros_[k] + widths[k] <= target) {
        rho = advance_regular(rho, t, zeros_[k] - widths[k]);
        rho = cross_zero(rho, env_, zeros_[k], widths[k], opts_.lamb_shift);
        t = zeros_[k] + widths[k];
        ++k;
      }
      if (k < zeros_.size() && zeros_[k] - widths[k] < target) {
        // Only possible for a sample within 1e-6 of a zero. The integrated
        // rate from the window edge diverges there, so the excited B
        // component is fully drained; the neglected remainder is of order
        // |G(target) / G(edge)|^2 < 1e-8.
        const Mat4 left = advance_regular(rho, t, zeros_[k] - widths[k]);
        out.push_back(apply_damping(left, 0.0, 0.0));
        rho = cross_zero(left, env_, zeros_[k], widths[k], opts_.lamb_shift);
        t = zeros_[k] + widths[k];
        ++k;
        continue;
      }
      if (target > t) {
        rho = advance_regular(rho, t, target);
        t = target;
      }
      out.push_back(rho);
    }
    return out;
  }

 private:
  static constexpr double kGradingScale = 0.05;

  double distance_to_zero(double t) const {
    double d = std::numeric_limits<double>::infinity();
    for (double z : zeros_) d = std::min(d, std::abs(t - z));
    return d;
  }

  // Crossing half-widths, shrunk so that sample times stay outside them.
  std::vector<double> windows(const std::vector<double>& times) const {
    std::vector<double> out;
    for (double z : zeros_) {
      double w = opts_.pole_window;
      for (double s : times) {
        const double d = std::abs(s - z);
        if (d > 1e-6) w = std::min(w, 0.5 * d);
      }
      out.push_back(std::max(w, 1e-6));
    }
    return out;
  }

  const EnvironmentParams& env_;
  double h_;
  const MasterEquationOptions& opts_;
  std::vector<double> zeros_;
};

}  // namespace

std::vector<Mat4> master_equation_trajectory(const TwoQubitState& state0, const EnvironmentParams& env,
                                             const std::vector<double>& times, const MasterEquationOptions& opts) {
  env.validate();
  if (!(opts.dt > 0.0)) throw InvalidInput("master equation: dt must be > 0");
  if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0))
    throw InvalidInput("master equation: sample times must be non-decreasing and >= 0");
  if (times.empty()) return {};

  const std::vector<double> zeros = amplitude_zeros(env, times.back());
  const Integrator coarse(env, opts.dt, opts, zeros);
  const Integrator fine(env, 0.5 * opts.dt, opts, zeros);
  const std::vector<Mat4> a = coarse.run(state0.matrix(), times);
  const std::vector<Mat4> b = fine.run(state0.matrix(), times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double diff = max_abs_diff(a[k], b[k]);
    if (!(diff <= opts.halving_tolerance)) {
      std::ostringstream msg;
      msg << "master equation: step halving changed the state by " << diff << " at t = " << times[k];
      throw IntegrationFailure(msg.str());
    }
  }
  return b;
}

TwoQubitState master_equation_oracle(const TwoQubitState& state0, const EnvironmentParams& env, double t_end,
                                     const MasterEquationOptions& opts) {
  if (!(t_end >= 0.0)) throw InvalidInput("master equation: t_end must be >= 0");
  return TwoQubitState(master_equation_trajectory(state0, env, {t_end}, opts).front());
}

}  // namespace qmem

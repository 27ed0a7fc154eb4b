#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmem/dynamics.hpp"

namespace qmem {

namespace {

// Trapezoidal solution of c' = -int_0^t f(t-s) c(s) ds on t_k = k h.
// Each step predicts with explicit Euler and corrects with the trapezoidal
// rule until the corrector is stationary.
std::vector<Complex> solve_trapezoidal(const EnvironmentParams& env, double h, std::size_t n) {
  std::vector<Complex> kernel(n + 1);
  for (std::size_t k = 0; k <= n; ++k) kernel[k] = correlation_kernel(env, static_cast<double>(k) * h);

  std::vector<Complex> c(n + 1);
  c[0] = 1.0;
  Complex rhs_prev = 0.0;  // c'(t_0) = 0: empty memory integral
  for (std::size_t m = 1; m <= n; ++m) {
    // Memory integral at t_m without the c_m endpoint term.
    Complex partial = 0.5 * kernel[m] * c[0];
    for (std::size_t j = 1; j < m; ++j) partial += kernel[m - j] * c[j];
    partial *= h;
    const auto rhs = [&](Complex cm) { return -(partial + 0.5 * h * kernel[0] * cm); };

    Complex cm = c[m - 1] + h * rhs_prev;
    for (int iter = 0; iter < 100; ++iter) {
      const Complex next = c[m - 1] + 0.5 * h * (rhs_prev + rhs(cm));
      const bool done = std::abs(next - cm) <= 1e-16 * std::max(1.0, std::abs(next));
      cm = next;
      if (done) break;
    }
    c[m] = cm;
    rhs_prev = rhs(cm);
  }
  return c;
}

}  // namespace

VolterraSeries volterra_oracle(const EnvironmentParams& env, double t_end, const VolterraOptions& opts) {
  env.validate();
  if (!(t_end >= 0.0)) throw InvalidInput("volterra_oracle: t_end must be >= 0");
  double h = opts.dt;
  if (h <= 0.0) h = 0.03 / std::max(1.0, std::hypot(env.lambda, env.delta) / env.gamma);
  // Shrink the step so the grid ends exactly at t_end.
  const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_end / h - 1e-9)));
  if (t_end > 0.0) h = t_end / static_cast<double>(n);

  const std::vector<Complex> coarse = solve_trapezoidal(env, h, n);
  const std::vector<Complex> fine = solve_trapezoidal(env, 0.5 * h, 2 * n);

  VolterraSeries out;
  out.dt = h;
  out.values.resize(n + 1);
  double worst = 0.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double d = std::abs(fine[2 * k] - coarse[k]);
    if (d > worst) {
      worst = d;
      worst_k = k;
    }
    // Error of the trapezoidal scheme is a series in h^2.
    out.values[k] = (4.0 * fine[2 * k] - coarse[k]) / 3.0;
  }
  if (!(worst <= opts.halving_tolerance)) {
    std::ostringstream msg;
    msg << "volterra_oracle: step halving changed c(t) by " << worst << " at t = " << out.time(worst_k);
    throw IntegrationFailure(msg.str());
  }
  return out;
}

}  // namespace qmem

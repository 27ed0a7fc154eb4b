#pragma once

// Entanglement and discord of two-qubit states. Discord is measured on the
// memory qubit B; the classical correlation is the information about A gained
// by a projective measurement of B.

#include <array>

#include "qmem/qmath.hpp"

namespace qmem {

/// Projective measurement of B along n = (sin t cos p, sin t sin p, cos t).
struct MeasurementBasis {
  double theta_m = 0.0;
  double phi_m = 0.0;

  /// P_{+,-} = (I +- n.sigma) / 2.
  std::array<Mat2, 2> projectors() const;
};

struct CorrelationReport {
  double concurrence = 0.0;
  double discord = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
};

/// True if every entry off the diagonal and the (0,3)/(3,0) corners is
/// below `tol` in magnitude.
bool is_x_state(const TwoQubitState& s, double tol = 1e-12);

/// Wootters concurrence via the eigenvalues of sqrt(rho) rho~ sqrt(rho).
double concurrence_general(const TwoQubitState& s);

/// 2 max{0, |rho14| - sqrt(rho22 rho33)}. Throws InvalidInput for non-X input.
double concurrence_x_state(const TwoQubitState& s);

/// S(A) + S(B) - S(AB).
double mutual_information(const TwoQubitState& s);

/// h(rho11 + rho22) + h(rho11 + rho33) + sum lambda log2 lambda, X-states only.
double mutual_information_x_state(const TwoQubitState& s);

/// S(rho_A) - sum_k p_k S(rho_A|k) for one measurement of B.
double classical_information(const TwoQubitState& s, const MeasurementBasis& basis);

/// Closed-form discord of an X-state: min over the sigma_z and sigma_x type
/// measurements of B. Throws InvalidInput for non-X input.
double discord_x_state(const TwoQubitState& s);

struct DiscordSearch {
  double discord = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
  MeasurementBasis basis;
};

/// Brute-force discord: 64 x 128 grid over the Bloch sphere of measurement
/// directions, then 20 rounds of stencil refinement with halving steps.
/// The result is an upper bound on the true (projective) discord.
DiscordSearch discord_search(const TwoQubitState& s);

double discord_oracle(const TwoQubitState& s);

/// Concurrence plus the oracle's discord / classical split.
CorrelationReport correlation_report(const TwoQubitState& s);

}  // namespace qmem

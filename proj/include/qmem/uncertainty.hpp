#pragma once

// Memory-assisted entropic uncertainty for sigma_x and sigma_z measured on A,
// with B as the quantum memory.

#include "qmem/qmath.hpp"

namespace qmem {

enum class Observable { SigmaX, SigmaZ };

struct UncertaintyReport {
  double lhs = 0.0;           ///< S(sigma_x|B) + S(sigma_z|B)
  double berta = 0.0;         ///< log2(1/c) + S(A|B)
  double eub = 0.0;           ///< berta + max{0, delta_term}
  double holevo_x = 0.0;      ///< I(sigma_x; B)
  double holevo_z = 0.0;      ///< I(sigma_z; B)
  double cond_entropy = 0.0;  ///< S(A|B)
  double delta_term = 0.0;    ///< I(A;B) - I(sigma_x;B) - I(sigma_z;B)
};

/// Eigenprojectors of the observable (eigenvalue +1 first).
std::array<Mat2, 2> eigenprojectors(Observable obs);

/// max_ij |<a_i|b_j>|^2 over the eigenvectors of the two observables.
double complementarity(Observable a, Observable b);

/// sum_i (Pi_i x I) rho (Pi_i x I) with Pi_i the eigenprojectors on A.
TwoQubitState post_measurement_state(const TwoQubitState& s, Observable obs);

/// S(AB) - S(B).
double conditional_entropy(const TwoQubitState& s);

/// S(X|B) = S(rho^XB) - S(B) for the post-measurement state.
double measured_conditional_entropy(const TwoQubitState& s, Observable obs);

/// S(rho_B) - sum_i p_i S(rho_B|i), computed from the post-measurement
/// ensemble.
double holevo_quantity(const TwoQubitState& s, Observable obs);

/// Closed-form Holevo quantity for X-states; throws InvalidInput otherwise.
double holevo_x_state(const TwoQubitState& s, Observable obs);

/// Full report: bounds from the definitional Holevo quantities and the
/// left-hand side from the post-measurement states.
UncertaintyReport eub(const TwoQubitState& s);

}  // namespace qmem

#pragma once

// Deterministic random generators for property checks.

#include <random>

#include "qmem/dynamics.hpp"

namespace qmem::sampling {

using Rng = std::mt19937_64;

/// Hermitian matrix with standard-normal entries.
template <std::size_t N>
SquareMatrix<N> random_hermitian(Rng& rng) {
  std::normal_distribution<double> n01;
  SquareMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    m(i, i) = n01(rng);
    for (std::size_t j = i + 1; j < N; ++j) {
      m(i, j) = Complex(n01(rng), n01(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Eigenvector matrix of a random Hermitian matrix.
template <std::size_t N>
SquareMatrix<N> random_unitary(Rng& rng) {
  return eig_hermitian(random_hermitian<N>(rng)).vectors;
}

/// Normalised G G^+ with G a complex Ginibre matrix.
template <std::size_t N>
SquareMatrix<N> random_density(Rng& rng) {
  std::normal_distribution<double> n01;
  SquareMatrix<N> g;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g(i, j) = Complex(n01(rng), n01(rng));
  SquareMatrix<N> rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return (rho + rho.adjoint()) * 0.5;
}

inline TwoQubitState random_two_qubit_state(Rng& rng) { return TwoQubitState(random_density<4>(rng)); }

inline InitialStateParams random_initial_params(Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  return {u01(rng), angle(rng)};
}

/// lambda in {0.1, 1, 10}, delta uniform in [0, 10].
inline EnvironmentParams random_environment(Rng& rng) {
  static constexpr double kLambdas[] = {0.1, 1.0, 10.0};
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> detuning(0.0, 10.0);
  return {1.0, kLambdas[pick(rng)], detuning(rng)};
}

}  // namespace qmem::sampling

#pragma once

// Shared fixtures for the unit tests.

#include <numbers>

#include "qmem/dynamics.hpp"

namespace qmem::test {

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

inline TwoQubitState bell() { return initial_state({1.0, kQuarterPi}); }

inline TwoQubitState maximally_mixed() { return TwoQubitState(Mat4::diagonal({0.25, 0.25, 0.25, 0.25})); }

/// X-state with real anti-diagonal element rho14.
inline TwoQubitState x_state(double r11, double r22, double r33, double r44, Complex r14) {
  Mat4 m = Mat4::diagonal({r11, r22, r33, r44});
  m(0, 3) = r14;
  m(3, 0) = std::conj(r14);
  return TwoQubitState(m);
}

inline Mat2 projector(Complex a, Complex b) {
  return Mat2{a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

}  // namespace qmem::test

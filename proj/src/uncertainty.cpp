#include "qmem/uncertainty.hpp"

#include <cmath>

#include "qmem/correlations.hpp"

namespace qmem {

namespace {

// log2(1/c) for the (sigma_x, sigma_z) pair.
constexpr double kComplementarityBits = 1.0;

}  // namespace

std::array<Mat2, 2> eigenprojectors(Observable obs) {
  const Mat2 sigma = obs == Observable::SigmaX ? pauli::x() : pauli::z();
  const Mat2 id = Mat2::identity();
  return {(id + sigma) * 0.5, (id - sigma) * 0.5};
}

double complementarity(Observable a, Observable b) {
  const auto va = eig_hermitian(a == Observable::SigmaX ? pauli::x() : pauli::z()).vectors;
  const auto vb = eig_hermitian(b == Observable::SigmaX ? pauli::x() : pauli::z()).vectors;
  double c = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex overlap = 0.0;
      for (std::size_t k = 0; k < 2; ++k) overlap += std::conj(va(k, i)) * vb(k, j);
      c = std::max(c, std::norm(overlap));
    }
  return c;
}

TwoQubitState post_measurement_state(const TwoQubitState& s, Observable obs) {
  Mat4 out;
  for (const Mat2& proj : eigenprojectors(obs)) {
    const Mat4 op = kron(proj, Mat2::identity());
    out += op * s.matrix() * op;
  }
  return TwoQubitState(out);
}

double conditional_entropy(const TwoQubitState& s) {
  return von_neumann_entropy(s) - von_neumann_entropy(partial_trace(s, Subsystem::B));
}

double measured_conditional_entropy(const TwoQubitState& s, Observable obs) {
  return conditional_entropy(post_measurement_state(s, obs));
}

double holevo_quantity(const TwoQubitState& s, Observable obs) {
  double conditional = 0.0;
  for (const Mat2& proj : eigenprojectors(obs)) {
    const Mat4 op = kron(proj, Mat2::identity());
    const Mat2 block = partial_trace(op * s.matrix() * op, Subsystem::B);
    const double p = block.trace().real();
    if (p <= 1e-15) continue;
    Mat2 cond = block * (1.0 / p);
    cond = (cond + cond.adjoint()) * 0.5;
    conditional += p * von_neumann_entropy(cond);
  }
  return von_neumann_entropy(partial_trace(s, Subsystem::B)) - conditional;
}

double holevo_x_state(const TwoQubitState& s, Observable obs) {
  if (!is_x_state(s)) throw InvalidInput("holevo_x_state: state is not of X form");
  const double r11 = s(0, 0).real(), r22 = s(1, 1).real(), r33 = s(2, 2).real(), r44 = s(3, 3).real();
  const double h_b = binary_entropy(r11 + r33);
  const auto xlogx = [](double v) { return v > 0.0 ? v * std::log2(v) : 0.0; };
  if (obs == Observable::SigmaZ) {
    return binary_entropy(r11 + r22) + h_b + xlogx(r11) + xlogx(r22) + xlogx(r33) + xlogx(r44);
  }
  const double z = 1.0 - 2.0 * (r22 + r44);
  const double k = std::min(1.0, std::sqrt(4.0 * std::norm(s(0, 3)) + z * z));
  const double lo = (1.0 - k) / 4.0, hi = (1.0 + k) / 4.0;
  return 1.0 + h_b + 2.0 * xlogx(lo) + 2.0 * xlogx(hi);
}

UncertaintyReport eub(const TwoQubitState& s) {
  UncertaintyReport r;
  r.cond_entropy = conditional_entropy(s);
  r.holevo_x = holevo_quantity(s, Observable::SigmaX);
  r.holevo_z = holevo_quantity(s, Observable::SigmaZ);
  r.delta_term = mutual_information(s) - r.holevo_x - r.holevo_z;
  r.berta = kComplementarityBits + r.cond_entropy;
  r.eub = r.berta + std::max(0.0, r.delta_term);
  r.lhs = measured_conditional_entropy(s, Observable::SigmaX) + measured_conditional_entropy(s, Observable::SigmaZ);
  return r;
}

}  // namespace qmem

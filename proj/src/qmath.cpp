#include "qmem/qmath.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qmem {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiRelTol = 1e-15;

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

namespace pauli {
Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
Mat2 y() { return Mat2{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

template <std::size_t N>
EigenSystem<N> eig_hermitian(const SquareMatrix<N>& m) {
  const double scale = std::max(1.0, m.max_abs());
  if (hermiticity_defect(m) > kHermitianTol * scale)
    throw InvalidInput("eig_hermitian: matrix is not Hermitian");

  SquareMatrix<N> a = m;
  SquareMatrix<N> v = SquareMatrix<N>::identity();
  const double frob = frobenius_norm(a);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiRelTol * frob) break;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (g == 0.0 || g <= 1e-18 * (std::abs(app) + std::abs(aqq))) continue;
        rotated = true;

        // Phase-rotate q so that the pivot is real, then apply a real
        // rotation that annihilates it.
        const Complex phase = apq / g;
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        SquareMatrix<N> u = SquareMatrix<N>::identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * std::conj(phase);
        u(q, q) = c * std::conj(phase);

        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
    }
    if (!rotated) break;
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

template EigenSystem<2> eig_hermitian<2>(const Mat2&);
template EigenSystem<4> eig_hermitian<4>(const Mat4&);

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < -kNegativityTol)
      throw InvalidState("negative eigenvalue " + std::to_string(p) + " in density matrix");
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

template <std::size_t N>
double von_neumann_entropy(const SquareMatrix<N>& rho) {
  const auto es = eig_hermitian(rho);
  return shannon_entropy(es.values);
}

template double von_neumann_entropy<2>(const Mat2&);
template double von_neumann_entropy<4>(const Mat4&);

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12))
    throw InvalidInput("binary_entropy: argument outside [0, 1]");
  x = std::clamp(x, 0.0, 1.0);
  const std::array<double, 2> p{x, 1.0 - x};
  return shannon_entropy(p);
}

namespace {

template <std::size_t N>
SquareMatrix<N> validated_density(const SquareMatrix<N>& rho, const char* what) {
  const double scale = std::max(1.0, rho.max_abs());
  if (hermiticity_defect(rho) > kHermitianTol * scale)
    throw InvalidState(std::string(what) + ": matrix is not Hermitian");
  const Complex tr = rho.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kHermitianTol)
    throw InvalidState(std::string(what) + ": trace is not 1");
  SquareMatrix<N> h = (rho + rho.adjoint()) * 0.5;
  const auto es = eig_hermitian(h);
  if (es.values.back() < -kNegativityTol)
    throw InvalidState(std::string(what) + ": matrix is not positive semidefinite");
  return h;
}

}  // namespace

TwoQubitState::TwoQubitState(const Mat4& rho) : rho_(validated_density(rho, "TwoQubitState")) {}

QubitState::QubitState(const Mat2& rho) : rho_(validated_density(rho, "QubitState")) {}

Mat2 partial_trace(const Mat4& m, Subsystem keep) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Subsystem::A)
          r(i, j) += m(2 * i + k, 2 * j + k);
        else
          r(i, j) += m(2 * k + i, 2 * k + j);
      }
  return r;
}

QubitState partial_trace(const TwoQubitState& s, Subsystem keep) {
  return QubitState(partial_trace(s.matrix(), keep));
}

double von_neumann_entropy(const TwoQubitState& s) { return von_neumann_entropy(s.matrix()); }

double von_neumann_entropy(const QubitState& s) { return von_neumann_entropy(s.matrix()); }

}  // namespace qmem

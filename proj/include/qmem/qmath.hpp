#pragma once

// Small dense complex linear algebra for one- and two-qubit density matrices.
//
// Everything here is fixed-size (2x2 or 4x4) and value-semantic. The basis of
// a two-qubit matrix is |00>,|01>,|10>,|11> with qubit A the first tensor
// factor and the memory qubit B the second.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "qmem/errors.hpp"

namespace qmem {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativityTol = 1e-9;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() = default;

  /// Row-major initialisation; missing entries are zero.
  SquareMatrix(std::initializer_list<Complex> row_major) {
    std::size_t k = 0;
    for (const Complex& v : row_major) {
      if (k >= N * N) throw InvalidInput("SquareMatrix: too many initialisers");
      data_[k++] = v;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  SquareMatrix adjoint() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  SquareMatrix conjugate() const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.data_[k] = std::conj(data_[k]);
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest absolute entry.
  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (Complex& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Max-norm of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

/// Largest |m(i,j) - conj(m(j,i))|.
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

Mat4 kron(const Mat2& a, const Mat2& b);

namespace pauli {
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

/// Eigen-decomposition of a Hermitian matrix. Values are sorted descending;
/// column k of `vectors` is the eigenvector for `values[k]`.
template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};
  SquareMatrix<N> vectors;
};

/// Cyclic complex Jacobi eigensolver. Throws InvalidInput if `m` is not
/// Hermitian within 1e-12 (scaled by the matrix magnitude when it exceeds 1).
template <std::size_t N>
EigenSystem<N> eig_hermitian(const SquareMatrix<N>& m);

extern template EigenSystem<2> eig_hermitian<2>(const Mat2&);
extern template EigenSystem<4> eig_hermitian<4>(const Mat4&);

/// -sum p log2 p with 0 log 0 = 0. Entries in [-1e-9, 0) are clamped to 0;
/// anything more negative throws InvalidState.
double shannon_entropy(std::span<const double> probabilities);

/// Von Neumann entropy in bits of a one- or two-qubit density matrix.
template <std::size_t N>
double von_neumann_entropy(const SquareMatrix<N>& rho);

extern template double von_neumann_entropy<2>(const Mat2&);
extern template double von_neumann_entropy<4>(const Mat4&);

/// h(x) = -x log2 x - (1-x) log2 (1-x). Inputs within 1e-12 of [0,1] are
/// clamped; further outside throws InvalidInput.
double binary_entropy(double x);

enum class Subsystem { A, B };

/// Validated two-qubit density matrix: Hermitian, unit trace, PSD within
/// -1e-9. Construction is the only place the checks run.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat4& rho);

  const Mat4& matrix() const { return rho_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

 private:
  Mat4 rho_;
};

/// Validated single-qubit density matrix.
class QubitState {
 public:
  explicit QubitState(const Mat2& rho);

  const Mat2& matrix() const { return rho_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

 private:
  Mat2 rho_;
};

/// Reduced state of the kept qubit.
QubitState partial_trace(const TwoQubitState& s, Subsystem keep);

/// Unchecked partial trace on raw matrices (used on unnormalised blocks).
Mat2 partial_trace(const Mat4& m, Subsystem keep);

double von_neumann_entropy(const TwoQubitState& s);
double von_neumann_entropy(const QubitState& s);

}  // namespace qmem

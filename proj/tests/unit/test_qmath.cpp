#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qmem/qmath.hpp"
#include "qmem/sampling.hpp"
#include "support.hpp"

using namespace qmem;
using qmem::sampling::Rng;

TEST_SUITE("qmath") {
  TEST_CASE("eigenvalues of the identity over two") {
    const auto es = eig_hermitian(Mat2::diagonal({0.5, 0.5}));
    CHECK(es.values[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(es.values[1] == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("eigenvalues of the Bell projector") {
    const auto es = eig_hermitian(test::bell().matrix());
    CHECK(std::abs(es.values[0] - 1.0) < 1e-12);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(es.values[k]) < 1e-12);
  }

  TEST_CASE("eigenvalues of an X-state with a real corner") {
    const auto es = eig_hermitian(test::x_state(0.4, 0.1, 0.1, 0.4, 0.3).matrix());
    const double expected[] = {0.7, 0.1, 0.1, 0.1};
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(es.values[k] - expected[k]) < 1e-12);
  }

  TEST_CASE("eigensolver rejects non-Hermitian input") {
    Mat2 m = Mat2::identity();
    m(0, 1) = 0.5;
    CHECK_THROWS_AS(eig_hermitian(m), InvalidInput);
  }

  TEST_CASE("eigen-decomposition reconstructs random Hermitian matrices") {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
      const Mat4 h = sampling::random_hermitian<4>(rng);
      const auto es = eig_hermitian(h);
      CHECK(std::is_sorted(es.values.rbegin(), es.values.rend()));
      Mat4 d;
      for (std::size_t k = 0; k < 4; ++k) d(k, k) = es.values[k];
      const Mat4 back = es.vectors * d * es.vectors.adjoint();
      CHECK(max_abs_diff(back, h) < 1e-12 * std::max(1.0, h.max_abs()));
      CHECK(max_abs_diff(es.vectors * es.vectors.adjoint(), Mat4::identity()) < 1e-12);
    }
  }

  TEST_CASE("von Neumann entropy reference values") {
    CHECK(std::abs(von_neumann_entropy(test::bell())) < 1e-12);
    CHECK(std::abs(von_neumann_entropy(test::maximally_mixed()) - 2.0) < 1e-12);
    CHECK(std::abs(von_neumann_entropy(Mat4::diagonal({0.5, 0.5, 0.0, 0.0})) - 1.0) < 1e-12);
  }

  TEST_CASE("entropy is unitarily invariant") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      const Mat4 rho = sampling::random_density<4>(rng);
      const Mat4 u = sampling::random_unitary<4>(rng);
      CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(Mat4(u * rho * u.adjoint()))) < 1e-9);
    }
  }

  TEST_CASE("Shannon entropy clamps tiny negatives and rejects larger ones") {
    const double ok[] = {0.5, 0.5 + 5e-10, -5e-10};
    CHECK(shannon_entropy(ok) == doctest::Approx(1.0).epsilon(1e-8));
    const double bad[] = {1.1, -0.1};
    CHECK_THROWS_AS(shannon_entropy(bad), InvalidState);
  }

  TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    // mpmath, 40 digits.
    CHECK(std::abs(binary_entropy(0.11) - 0.499915958164528) < 1e-14);
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-15));
    CHECK_THROWS_AS(binary_entropy(1.01), InvalidInput);
    CHECK_THROWS_AS(binary_entropy(-0.01), InvalidInput);
  }

  TEST_CASE("partial traces of reference states") {
    const QubitState a = partial_trace(test::bell(), Subsystem::A);
    CHECK(max_abs_diff(a.matrix(), Mat2::diagonal({0.5, 0.5})) < 1e-15);

    const TwoQubitState prod(kron(Mat2::diagonal({1.0, 0.0}), Mat2::diagonal({0.0, 1.0})));
    CHECK(max_abs_diff(partial_trace(prod, Subsystem::B).matrix(), Mat2::diagonal({0.0, 1.0})) < 1e-15);

    const TwoQubitState x = test::x_state(0.3, 0.2, 0.1, 0.4, {0.1, 0.05});
    CHECK(max_abs_diff(partial_trace(x, Subsystem::B).matrix(), Mat2::diagonal({0.4, 0.6})) < 1e-15);
    CHECK(max_abs_diff(partial_trace(x, Subsystem::A).matrix(), Mat2::diagonal({0.5, 0.5})) < 1e-15);
  }

  TEST_CASE("partial trace agrees with explicit index contraction") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      const Mat4 m = sampling::random_density<4>(rng);
      Mat2 ra, rb;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2)
          for (std::size_t b = 0; b < 2; ++b) ra(a, a2) += m(2 * a + b, 2 * a2 + b);
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t b2 = 0; b2 < 2; ++b2)
          for (std::size_t a = 0; a < 2; ++a) rb(b, b2) += m(2 * a + b, 2 * a + b2);
      CHECK(max_abs_diff(partial_trace(m, Subsystem::A), ra) < 1e-15);
      CHECK(max_abs_diff(partial_trace(m, Subsystem::B), rb) < 1e-15);
    }
  }

  TEST_CASE("partial trace of random product states recovers the factor") {
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
      const Mat2 ra = sampling::random_density<2>(rng);
      const Mat2 rb = sampling::random_density<2>(rng);
      const TwoQubitState s(kron(ra, rb));
      CHECK(max_abs_diff(partial_trace(s, Subsystem::A).matrix(), ra) < 1e-12);
      CHECK(max_abs_diff(partial_trace(s, Subsystem::B).matrix(), rb) < 1e-12);
    }
  }

  TEST_CASE("X-state eigenvalues match the closed form") {
    Rng rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      double d[4];
      double total = 0.0;
      for (double& v : d) total += (v = u(rng));
      for (double& v : d) v /= total;
      const double bound = std::sqrt(d[0] * d[3]) * u(rng);
      const double phase = 6.283185307179586 * u(rng);
      const Complex c = std::polar(bound, phase);
      const auto es = eig_hermitian(test::x_state(d[0], d[1], d[2], d[3], c).matrix());
      const double mid = 0.5 * (d[0] + d[3]);
      const double rad = std::sqrt(0.25 * (d[0] - d[3]) * (d[0] - d[3]) + bound * bound);
      std::array<double, 4> expected{d[1], d[2], mid + rad, mid - rad};
      std::sort(expected.rbegin(), expected.rend());
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(es.values[k] - expected[k]) < 1e-10);
    }
  }

  TEST_CASE("state validation") {
    CHECK_THROWS_AS(TwoQubitState(Mat4::diagonal({0.5, 0.5, 0.5, 0.5})), InvalidState);
    CHECK_THROWS_AS(TwoQubitState(Mat4::diagonal({1.2, -0.2, 0.0, 0.0})), InvalidState);
    Mat4 skew = Mat4::diagonal({0.25, 0.25, 0.25, 0.25});
    skew(0, 1) = Complex(0.0, 0.1);
    CHECK_THROWS_AS(TwoQubitState{skew}, InvalidState);
    CHECK_THROWS_AS(QubitState(Mat2::diagonal({0.7, 0.7})), InvalidState);
    CHECK_NOTHROW(TwoQubitState(Mat4::diagonal({1.0 + 5e-11, -5e-11, 0.0, 0.0})));
  }

  TEST_CASE("all library outputs are finite on random valid inputs") {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
      const TwoQubitState s = sampling::random_two_qubit_state(rng);
      CHECK(std::isfinite(von_neumann_entropy(s)));
      const auto es = eig_hermitian(s.matrix());
      for (double v : es.values) CHECK(std::isfinite(v));
    }
  }
}

#include <cmath>

#include "doctest.h"
#include "qmem/sampling.hpp"
#include "qmem/uncertainty.hpp"
#include "support.hpp"

using namespace qmem;
using qmem::sampling::Rng;

namespace {

TwoQubitState dead_bell() {
  DecayEnvelope e;
  e.g = 0.0;
  e.abs_g2 = 0.0;
  return evolve(test::bell(), kraus_pair(e));
}

void check_report_invariants(const UncertaintyReport& u) {
  CHECK(u.lhs >= u.eub - 1e-9);
  CHECK(u.eub >= u.berta - 1e-9);
  CHECK(std::abs(u.eub - (1.0 + u.cond_entropy + std::max(0.0, u.delta_term))) < 1e-12);
  CHECK(std::abs(u.berta - (1.0 + u.cond_entropy)) < 1e-12);
}

}  // namespace

TEST_SUITE("uncertainty") {
  TEST_CASE("complementarity of the Pauli observables") {
    CHECK(std::abs(complementarity(Observable::SigmaX, Observable::SigmaZ) - 0.5) < 1e-15);
    CHECK(std::abs(complementarity(Observable::SigmaZ, Observable::SigmaX) - 0.5) < 1e-15);
    CHECK(std::abs(complementarity(Observable::SigmaZ, Observable::SigmaZ) - 1.0) < 1e-15);
  }

  TEST_CASE("eigenprojectors resolve the observable") {
    for (auto [obs, op] : {std::pair{Observable::SigmaX, pauli::x()}, std::pair{Observable::SigmaZ, pauli::z()}}) {
      const auto [plus, minus] = eigenprojectors(obs);
      CHECK(max_abs_diff(plus * plus, plus) < 1e-15);
      CHECK((plus * minus).max_abs() < 1e-15);
      CHECK(max_abs_diff(plus + minus, Mat2::identity()) < 1e-15);
      CHECK(max_abs_diff(plus - minus, op) < 1e-15);
    }
  }

  TEST_CASE("post-measurement states") {
    CHECK(max_abs_diff(post_measurement_state(test::bell(), Observable::SigmaZ).matrix(),
                       Mat4::diagonal({0.5, 0.0, 0.0, 0.5})) < 1e-15);
    CHECK(max_abs_diff(post_measurement_state(test::maximally_mixed(), Observable::SigmaX).matrix(),
                       test::maximally_mixed().matrix()) < 1e-15);

    const double s = 1.0 / std::sqrt(2.0);
    const Mat2 pp = test::projector(s, s), mm = test::projector(s, -s);
    const Mat4 expected = 0.5 * (kron(pp, pp) + kron(mm, mm));
    const TwoQubitState px = post_measurement_state(test::bell(), Observable::SigmaX);
    CHECK(max_abs_diff(px.matrix(), expected) < 1e-15);
    CHECK(std::abs(von_neumann_entropy(px) - 1.0) < 1e-12);
  }

  TEST_CASE("conditional entropy") {
    CHECK(std::abs(conditional_entropy(test::bell()) + 1.0) < 1e-12);
    CHECK(std::abs(conditional_entropy(test::maximally_mixed()) - 1.0) < 1e-12);
    CHECK(std::abs(conditional_entropy(dead_bell()) - 1.0) < 1e-12);
  }

  TEST_CASE("Holevo quantities") {
    CHECK(std::abs(holevo_quantity(test::bell(), Observable::SigmaZ) - 1.0) < 1e-12);
    CHECK(std::abs(holevo_quantity(test::bell(), Observable::SigmaX) - 1.0) < 1e-12);
    CHECK(std::abs(holevo_quantity(test::maximally_mixed(), Observable::SigmaX)) < 1e-12);
    CHECK(std::abs(holevo_quantity(test::maximally_mixed(), Observable::SigmaZ)) < 1e-12);
  }

  TEST_CASE("closed-form Holevo quantities match the definition on the evolved family") {
    Rng rng(31);
    std::uniform_real_distribution<double> ut(0.0, 50.0);
    for (int i = 0; i < 300; ++i) {
      const InitialStateParams p = sampling::random_initial_params(rng);
      const TwoQubitState s = analytic_x_state(p, envelope(sampling::random_environment(rng), ut(rng)));
      for (Observable o : {Observable::SigmaX, Observable::SigmaZ})
        CHECK(std::abs(holevo_x_state(s, o) - holevo_quantity(s, o)) < 1e-10);
    }
  }

  TEST_CASE("bounds for reference states") {
    const UncertaintyReport b = eub(test::bell());
    CHECK(std::abs(b.eub) < 1e-10);
    CHECK(std::abs(b.lhs) < 1e-10);
    CHECK(std::abs(b.berta) < 1e-10);
    check_report_invariants(b);

    const UncertaintyReport m = eub(test::maximally_mixed());
    CHECK(std::abs(m.eub - 2.0) < 1e-12);
    CHECK(std::abs(m.lhs - 2.0) < 1e-12);
    check_report_invariants(m);

    const UncertaintyReport d = eub(dead_bell());
    CHECK(std::abs(d.eub - 2.0) < 1e-12);
    CHECK(std::abs(d.cond_entropy - 1.0) < 1e-12);
    CHECK(std::abs(d.delta_term) < 1e-12);
    check_report_invariants(d);
  }

  TEST_CASE("sandwich inequality on random states") {
    Rng rng(32);
    for (int i = 0; i < 500; ++i) check_report_invariants(eub(sampling::random_two_qubit_state(rng)));
  }

  TEST_CASE("sandwich inequality on the evolved family") {
    Rng rng(33);
    std::uniform_real_distribution<double> ut(0.0, 50.0);
    for (int i = 0; i < 500; ++i) {
      const InitialStateParams p = sampling::random_initial_params(rng);
      check_report_invariants(eub(analytic_x_state(p, envelope(sampling::random_environment(rng), ut(rng)))));
    }
  }

  TEST_CASE("measured conditional entropies add up to the left-hand side") {
    Rng rng(34);
    for (int i = 0; i < 50; ++i) {
      const TwoQubitState s = sampling::random_two_qubit_state(rng);
      const double lhs = measured_conditional_entropy(s, Observable::SigmaX) +
                         measured_conditional_entropy(s, Observable::SigmaZ);
      CHECK(std::abs(eub(s).lhs - lhs) < 1e-12);
    }
  }
}

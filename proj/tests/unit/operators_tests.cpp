#include <cmath>

#include <doctest.h>

#include "qbatt/operators.hpp"

using namespace qbatt;
using linalg::Matrix;

TEST_CASE("ladder algebra on one qubit") {
  const Matrix sm = ops::lowering();
  const Matrix sp = ops::raising();
  CHECK((sp * sm - ops::number()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sm * sm).cwiseAbs().maxCoeff() == 0.0);
  // |e> is index 0: lowering sends it to |g> (index 1)
  CHECK(sm(1, 0) == linalg::Complex(1.0, 0.0));
}

TEST_CASE("embedded operators act on their own qubit only") {
  CHECK((ops::lowering_a() * ops::lowering_b() -
         ops::lowering_b() * ops::lowering_a())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((ops::raising_a() * ops::lowering_b() -
         ops::lowering_b() * ops::raising_a())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // number_a is diagonal (1,1,0,0), number_b is (1,0,1,0)
  CHECK(ops::number_a()(0, 0).real() == 1.0);
  CHECK(ops::number_a()(1, 1).real() == 1.0);
  CHECK(ops::number_a()(2, 2).real() == 0.0);
  CHECK(ops::number_b()(1, 1).real() == 0.0);
  CHECK(ops::number_b()(2, 2).real() == 1.0);
}

TEST_CASE("pair Hamiltonian carries levels (2, 1, 1, 0)") {
  const Matrix h = ops::pair_hamiltonian().matrix();
  CHECK(h(0, 0).real() == 2.0 * kOmega0);
  CHECK(h(1, 1).real() == 1.0 * kOmega0);
  CHECK(h(2, 2).real() == 1.0 * kOmega0);
  CHECK(h(3, 3).real() == 0.0);
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one-excitation superpositions are orthonormal") {
  const double c1 = 0.6;
  const auto plus = ops::symmetric_state(c1);
  const auto minus = ops::subradiant_state(c1);
  CHECK(std::abs(plus.amplitudes().norm() - 1.0) < 1e-15);
  CHECK(std::abs(minus.amplitudes().norm() - 1.0) < 1e-15);
  CHECK(std::abs(plus.amplitudes().dot(minus.amplitudes())) < 1e-15);
  // c1 rides on |eg> in the symmetric combination
  CHECK(plus.amplitudes()(ops::kChargerExcited).real() ==
        doctest::Approx(0.6));
  CHECK(minus.amplitudes()(ops::kBatteryExcited).real() ==
        doctest::Approx(-0.6));
}

TEST_CASE("basis_state covers the four labels and rejects others") {
  for (int k = 0; k < 4; ++k) {
    const auto s = ops::basis_state(k);
    CHECK(s.amplitudes()(k).real() == 1.0);
  }
  CHECK_THROWS_AS(ops::basis_state(4), DomainError);
  CHECK_THROWS_AS(ops::symmetric_state(1.5), DomainError);
  CHECK_THROWS_AS(ops::subradiant_state(-0.1), DomainError);
}

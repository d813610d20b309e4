#include "qbatt/operators.hpp"

#include <cmath>
#include <sstream>

namespace qbatt::ops {

namespace {

Eigen::Matrix4cd embed(const Eigen::Matrix2cd& op_a,
                       const Eigen::Matrix2cd& op_b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = op_a(i, j) * op_b;
    }
  }
  return out;
}

Eigen::Matrix2cd identity2() {
  return Eigen::Matrix2cd::Identity();
}

}  // namespace

Eigen::Matrix2cd lowering() {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(1, 0) = 1.0;  // |g><e|
  return s;
}

Eigen::Matrix2cd raising() {
  return lowering().adjoint();
}

Eigen::Matrix2cd number() {
  Eigen::Matrix2cd n = Eigen::Matrix2cd::Zero();
  n(0, 0) = 1.0;  // |e><e|
  return n;
}

Eigen::Matrix4cd lowering_a() { return embed(lowering(), identity2()); }
Eigen::Matrix4cd lowering_b() { return embed(identity2(), lowering()); }
Eigen::Matrix4cd raising_a() { return embed(raising(), identity2()); }
Eigen::Matrix4cd raising_b() { return embed(identity2(), raising()); }
Eigen::Matrix4cd number_a() { return embed(number(), identity2()); }
Eigen::Matrix4cd number_b() { return embed(identity2(), number()); }

linalg::HermitianObservable single_qubit_hamiltonian() {
  return linalg::HermitianObservable(kOmega0 * number());
}

linalg::HermitianObservable pair_hamiltonian() {
  return linalg::HermitianObservable(kOmega0 * (number_a() + number_b()));
}

linalg::PureStateVector basis_state(int index) {
  if (index < 0 || index > 3) {
    std::ostringstream os;
    os << "basis_state: index " << index << " out of range";
    throw DomainError(os.str());
  }
  linalg::Vector v = linalg::Vector::Zero(4);
  v(index) = 1.0;
  return linalg::PureStateVector(v);
}

linalg::PureStateVector symmetric_state(double c1) {
  if (!(c1 >= 0.0 && c1 <= 1.0)) {
    std::ostringstream os;
    os << "symmetric_state: c1 = " << c1 << " outside [0, 1]";
    throw DomainError(os.str());
  }
  const double c2 = std::sqrt(1.0 - c1 * c1);
  linalg::Vector v = linalg::Vector::Zero(4);
  v(kChargerExcited) = c1;
  v(kBatteryExcited) = c2;
  return linalg::PureStateVector(v);
}

linalg::PureStateVector subradiant_state(double c1) {
  if (!(c1 >= 0.0 && c1 <= 1.0)) {
    std::ostringstream os;
    os << "subradiant_state: c1 = " << c1 << " outside [0, 1]";
    throw DomainError(os.str());
  }
  const double c2 = std::sqrt(1.0 - c1 * c1);
  linalg::Vector v = linalg::Vector::Zero(4);
  v(kChargerExcited) = c2;
  v(kBatteryExcited) = -c1;
  return linalg::PureStateVector(v);
}

}  // namespace qbatt::ops

#pragma once

#include "qbatt/linalg.hpp"
#include "qbatt/types.hpp"

namespace qbatt::ops {

// Two-qubit product basis in charger (A) / battery (B) order:
//   0 = |e>_A|e>_B,  1 = |e>_A|g>_B,  2 = |g>_A|e>_B,  3 = |g>_A|g>_B.
// The single-qubit basis puts |e> first, so index = 2*(A ground) + (B ground)
// and two-qubit operators are kron(op_A, op_B).
inline constexpr int kBothExcited = 0;
inline constexpr int kChargerExcited = 1;
inline constexpr int kBatteryExcited = 2;
inline constexpr int kGround = 3;

// Single-qubit ladder and number operators (2x2).
Eigen::Matrix2cd lowering();  // |g><e|
Eigen::Matrix2cd raising();   // |e><g|
Eigen::Matrix2cd number();    // |e><e|

// Embeddings into the pair space (4x4).
Eigen::Matrix4cd lowering_a();
Eigen::Matrix4cd lowering_b();
Eigen::Matrix4cd raising_a();
Eigen::Matrix4cd raising_b();
Eigen::Matrix4cd number_a();
Eigen::Matrix4cd number_b();

// Free Hamiltonians, omega0 = 1 units.
linalg::HermitianObservable single_qubit_hamiltonian();  // omega0 |e><e|
linalg::HermitianObservable pair_hamiltonian();          // omega0 (n_A + n_B)

// Basis state |index>.
linalg::PureStateVector basis_state(int index);

// One-excitation superpositions c1|eg> + c2|ge> and its orthogonal partner
// c2|eg> - c1|ge>, with c2 = sqrt(1 - c1^2), 0 <= c1 <= 1.
linalg::PureStateVector symmetric_state(double c1);
linalg::PureStateVector subradiant_state(double c1);

}  // namespace qbatt::ops

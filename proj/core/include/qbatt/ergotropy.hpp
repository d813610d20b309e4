#pragma once

#include "qbatt/linalg.hpp"
#include "qbatt/types.hpp"

namespace qbatt::ergotropy {

// Energy bookkeeping for one work-extraction problem, in omega0 units.
// w_max is the structural bound max(H) - min(H), independent of the state.
struct Report {
  double internal_energy = 0.0;
  double passive_energy = 0.0;
  double ergotropy = 0.0;
  double w_max = 0.0;
};

// tr(rho H); throws ImaginaryResidue if the trace has an imaginary part
// beyond 1e-10.
double internal_energy(const linalg::DensityMatrix& rho,
                       const linalg::HermitianObservable& h);

// Passive counterpart of rho under h: descending rho populations placed on
// ascending energy levels.
linalg::DensityMatrix passive_state(const linalg::DensityMatrix& rho,
                                    const linalg::HermitianObservable& h);

// Full eigendecomposition route, any matching dimension.
Report general(const linalg::DensityMatrix& rho,
               const linalg::HermitianObservable& h);

// Closed form for a diagonal-coherence-free qubit with excited population p:
// omega0 (2p - 1) when p >= 1/2, else zero.
double two_level(double excited_population);

// Battery-cell ergotropy of a pair state: work extractable from qubit B of
// the 4x4 state by local unitaries.  Closed form in the battery's reduced
// Bloch data; negative round-off is clamped to zero (warned past 1e-12).
double single_cell(const linalg::DensityMatrix& rho);

// Work extractable from the full pair under global unitaries, battery
// Hamiltonian omega0 (n_A + n_B).
double two_cell(const linalg::DensityMatrix& rho);

// Scale a per-pair report to n_pairs independent identical pairs.
Report aggregate_pairs(const Report& pair_report, int n_pairs);

}  // namespace qbatt::ergotropy

#pragma once

#include <vector>

#include "qbatt/linalg.hpp"
#include "qbatt/types.hpp"

namespace qbatt::lindblad {

// Driven pair of emitters in the frame rotating at the laser frequency:
//   H = detuning (n_A + n_B) + dipole (sA+ sB- + sB+ sA-)
//       - (drive1 (sA+ + sA-) + drive2 (sB+ + sB-)) / 2
// with independent decay at rate `decay` on each qubit and cross terms
// `collective_decay` coupling the two decay channels.  Complete positivity
// requires collective_decay^2 <= decay^2.
struct MarkovParams {
  double detuning = 0.0;          // omega0 - omega_laser
  double dipole = 0.0;            // coherent exchange Omega
  double decay = 0.0;             // Gamma >= 0
  double collective_decay = 0.0;  // gamma, |gamma| <= Gamma
  double drive1 = 0.0;            // laser amplitude on the charger
  double drive2 = 0.0;            // laser amplitude on the battery
  ChargingWindow window;

  // Throws DomainError / CPViolation on bad values.
  void validate() const;
};

// The 16x16 master-equation generator in column-stacking convention:
// d vec(rho)/dt = L vec(rho).
class Generator {
 public:
  explicit Generator(const MarkovParams& params);

  const MarkovParams& params() const { return params_; }
  const linalg::Matrix& matrix() const { return l_; }
  double one_norm() const { return norm1_; }

  // Step size for the fixed-step integrator: 0.005 over the largest rate in
  // the problem, shrunk further so that step * |L|_1 <= 0.1.
  double default_step() const;

 private:
  MarkovParams params_;
  linalg::Matrix l_;
  double norm1_;
};

// Classical fourth-order Runge-Kutta propagation of rho0 to time t with a
// fixed step (<= `step`; t is split into equal substeps).  The result is
// re-validated; a step with step * |L|_1 > 0.1 throws StepTooLarge.
linalg::DensityMatrix evolve(const Generator& gen,
                             const linalg::DensityMatrix& rho0, double t,
                             double step);

// exp(L t) applied to rho0: reference propagator for cross-checking evolve.
linalg::DensityMatrix exact_propagate(const Generator& gen,
                                      const linalg::DensityMatrix& rho0,
                                      double t);

struct SeriesPoint {
  double tau = 0.0;
  double ergotropy = 0.0;
};

// Ergotropy along a trajectory, evaluated at the (non-decreasing,
// non-negative) grid times.  Integration is incremental: each interval is
// covered with equal substeps no larger than the generator's default step,
// and the state is validated at every grid point.
std::vector<SeriesPoint> single_cell_series(const MarkovParams& params,
                                            const linalg::DensityMatrix& rho0,
                                            const std::vector<double>& grid);
std::vector<SeriesPoint> two_cell_series(const MarkovParams& params,
                                         const linalg::DensityMatrix& rho0,
                                         const std::vector<double>& grid);

// max |L vec(P)| for the projector P on (|eg> - |ge>)/sqrt(2).  Zero (to
// round-off) exactly when collective_decay = decay and drive1 = drive2.
double dark_state_residual(const MarkovParams& params);

}  // namespace qbatt::lindblad

#pragma once

#include <complex>

#include "qbatt/linalg.hpp"
#include "qbatt/types.hpp"

namespace qbatt::nonmarkov {

enum class BathRegime { Overdamped, Critical, Underdamped };

// Lorentzian environment shared by charger and battery, parametrized by the
// spectral width lambda and the collective vacuum Rabi frequency
// rabi = sqrt(omega_R), both in omega0 units.  lambda > 2 rabi relaxes
// monotonically; lambda < 2 rabi oscillates (memory effects).
class LorentzianBath {
 public:
  LorentzianBath(double lambda, double rabi);

  double lambda() const { return lambda_; }
  double rabi() const { return rabi_; }
  BathRegime regime() const { return regime_; }

 private:
  double lambda_;
  double rabi_;
  BathRegime regime_;
};

// Memory kernel kappa(t): the common amplitude damping factor of the
// single-excitation sector.  kappa(0) = 1; decays to 0 at long times,
// monotonically in the overdamped regime and through damped oscillations
// (with sign changes) in the underdamped one.  Stable for all t >= 0,
// including deep overdamped tails where the naive cosh/sinh form overflows.
double kappa(const LorentzianBath& bath, double t);

// Relative coupling weights of charger (c1) and battery (c2) to the common
// mode, c1^2 + c2^2 = 1, both non-negative.
class CouplingSplit {
 public:
  explicit CouplingSplit(double c1);
  static CouplingSplit from_pair(double c1, double c2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }

 private:
  CouplingSplit(double c1, double c2) : c1_(c1), c2_(c2) {}
  double c1_;
  double c2_;
};

// Single-excitation state: amplitudes on |e g> (charger excited, nu1) and
// |g e> (battery excited, nu2); the remaining weight 1 - |nu1|^2 - |nu2|^2
// is the excitation lost to the environment.
struct SingleExcitationState {
  std::complex<double> nu1;
  std::complex<double> nu2;
  double t = 0.0;
};

// Exact amplitude map at time t from initial amplitudes (nu01, nu02) with
// |nu01|^2 + |nu02|^2 = 1.  The component along c2|eg> - c1|ge> is frozen;
// the orthogonal one is multiplied by kappa(t).
SingleExcitationState evolve_amplitudes(const LorentzianBath& bath,
                                        const CouplingSplit& split,
                                        std::complex<double> nu01,
                                        std::complex<double> nu02, double t);

// Same map for an initial state given by its weight alpha_minus on the
// frozen combination c2|eg> - c1|ge>, with alpha_plus = +sqrt(1 -
// alpha_minus^2) on the orthogonal one.
SingleExcitationState evolve_subradiant(const LorentzianBath& bath,
                                        const CouplingSplit& split,
                                        double alpha_minus, double t);

struct ReducedStates {
  linalg::DensityMatrix charger;
  linalg::DensityMatrix battery;
};

// Reduced single-qubit states diag(|nu|^2, 1 - |nu|^2); validates both.
ReducedStates reduced_states(const SingleExcitationState& s);

struct EnergyChanges {
  double charger = 0.0;  // E_A(t) - E_A(0), <= 0 for an excited charger
  double battery = 0.0;  // E_B(t) - E_B(0)
};

// Mean local energy changes relative to the initial amplitudes.
EnergyChanges energy_changes(const SingleExcitationState& now,
                             std::complex<double> nu01,
                             std::complex<double> nu02);

struct AmplitudeTriple {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double nu_env = 0.0;  // weight outside the qubit pair
};

// Hyperspherical parametrization of a real amplitude triple:
//   nu1 = cos(2 theta1), nu2 = sin(2 theta1) sin(2 theta2),
//   nu_env = sin(2 theta1) cos(2 theta2),  theta in [0, pi/2].
AmplitudeTriple angle_map(double theta1, double theta2);

struct Angles {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

// Inverse of angle_map from (nu1, nu2) with nu2 >= 0 and
// nu1^2 + nu2^2 <= 1; theta2 = 0 by convention when nu1 = +-1.
Angles solve_angles(double nu1, double nu2);

}  // namespace qbatt::nonmarkov

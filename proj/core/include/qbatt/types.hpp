#pragma once

namespace qbatt {

// Everything in the library is reported in units of the qubit transition
// frequency, which is pinned to one.  Times are therefore in units of
// 1/omega0 and energies in units of omega0 (hbar = 1).
inline constexpr double kOmega0 = 1.0;

// Interaction switch window: couplings are on for t in [0, tau) and the
// state is frozen at its t = tau value afterwards.
struct ChargingWindow {
  double tau = 0.0;
};

}  // namespace qbatt

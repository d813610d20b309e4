#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qbatt/lindblad.hpp"

// Slow-but-independent reference implementations used only by the test
// suite.  Nothing here may call into the library's eigensolver, matrix
// exponential or integrator.
namespace oracles {

using Matrix = Eigen::MatrixXcd;

// Eigenvalues (ascending) of a Hermitian matrix by inertia bisection: the
// number of eigenvalues below x equals the number of negative pivots of a
// symmetric elimination of M - xI (Sylvester's law).
std::vector<double> hermitian_eigenvalues_bisection(const Matrix& m,
                                                    double tol = 1e-12);

Matrix random_ginibre(int dim, std::mt19937_64& rng);
Matrix random_density(int dim, std::mt19937_64& rng);
Matrix random_hermitian(int dim, double scale, std::mt19937_64& rng);
Matrix random_unitary(int dim, std::mt19937_64& rng);

// Passive energy by sorted-spectra pairing (descending populations onto
// ascending energies), eigenvalues from the bisection solver above.
double passive_energy_pairing(const Matrix& rho, const Matrix& h);

// Lab-frame master equation with the explicit exp(+-i omega_L t) drive
// phases, integrated by time-dependent RK4.  Validation reference for the
// rotating-frame generator; p.detuning is ignored in favor of the explicit
// frequencies.
Matrix lab_frame_evolve(const qbatt::lindblad::MarkovParams& p, double omega0,
                        double omega_laser, const Matrix& rho0, double t,
                        double step);

}  // namespace oracles

#include "qbatt/ergotropy.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

namespace qbatt::ergotropy {

namespace {

constexpr double kImagTol = 1e-10;
// Closed forms can only go negative through round-off; anything past this
// is worth a warning before clamping.
constexpr double kClampWarn = -1e-12;

void require_same_dim(const linalg::DensityMatrix& rho,
                      const linalg::HermitianObservable& h) {
  if (rho.dim() != h.dim()) {
    std::ostringstream os;
    os << "state dim " << rho.dim() << " vs observable dim " << h.dim();
    throw DimensionMismatch(os.str());
  }
}

double clamp_roundoff(double w, const char* who) {
  if (w >= 0.0) {
    return w;
  }
  if (w < kClampWarn) {
    std::cerr << who << ": clamping negative value " << w << " to zero\n";
  }
  return 0.0;
}

}  // namespace

double internal_energy(const linalg::DensityMatrix& rho,
                       const linalg::HermitianObservable& h) {
  require_same_dim(rho, h);
  const linalg::Complex tr = (rho.matrix() * h.matrix()).trace();
  if (std::abs(tr.imag()) > kImagTol) {
    std::ostringstream os;
    os << "internal_energy: imaginary part " << tr.imag();
    throw ImaginaryResidue(os.str());
  }
  return tr.real();
}

linalg::DensityMatrix passive_state(const linalg::DensityMatrix& rho,
                                    const linalg::HermitianObservable& h) {
  require_same_dim(rho, h);
  const auto rho_es = linalg::hermitian_eigensystem(rho);
  const auto h_es = linalg::hermitian_eigensystem(h);
  const Eigen::Index n = rho.dim();
  // Populations descending onto energies ascending.
  linalg::Matrix sigma = linalg::Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double p = rho_es.values(n - 1 - k);
    sigma += p * h_es.vectors.col(k) * h_es.vectors.col(k).adjoint();
  }
  return linalg::validate_density_matrix(sigma);
}

Report general(const linalg::DensityMatrix& rho,
               const linalg::HermitianObservable& h) {
  Report rep;
  rep.internal_energy = internal_energy(rho, h);
  rep.passive_energy = internal_energy(passive_state(rho, h), h);
  rep.ergotropy =
      clamp_roundoff(rep.internal_energy - rep.passive_energy, "ergotropy");
  const auto h_es = linalg::hermitian_eigensystem(h);
  rep.w_max = h_es.values(h.dim() - 1) - h_es.values(0);
  return rep;
}

double two_level(double excited_population) {
  const double p = excited_population;
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "two_level: population " << p << " outside [0, 1]";
    throw DomainError(os.str());
  }
  return p >= 0.5 ? kOmega0 * (2.0 * p - 1.0) : 0.0;
}

double single_cell(const linalg::DensityMatrix& rho) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << "single_cell: expected a 4x4 pair state, got " << rho.dim();
    throw DimensionMismatch(os.str());
  }
  const linalg::Matrix& r = rho.matrix();
  // Reduced battery qubit: excited population and coherence.
  const double p = (r(0, 0) + r(2, 2)).real();
  const linalg::Complex c = r(0, 1) + r(2, 3);
  const double z = 2.0 * p - 1.0;
  const double w =
      0.5 * kOmega0 * (std::sqrt(4.0 * std::norm(c) + z * z) + z);
  return clamp_roundoff(w, "single_cell");
}

double two_cell(const linalg::DensityMatrix& rho) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << "two_cell: expected a 4x4 pair state, got " << rho.dim();
    throw DimensionMismatch(os.str());
  }
  const auto es = linalg::hermitian_eigensystem(rho);
  const linalg::Matrix& r = rho.matrix();
  // Energy levels are (2, 1, 1, 0) * omega0; passive energy is the
  // descending populations paired with the levels ascending.
  const double w = kOmega0 * (-2.0 * es.values(0) - es.values(1) -
                              es.values(2) + 2.0 * r(0, 0).real() +
                              r(1, 1).real() + r(2, 2).real());
  return clamp_roundoff(w, "two_cell");
}

Report aggregate_pairs(const Report& pair_report, int n_pairs) {
  if (n_pairs < 1) {
    std::ostringstream os;
    os << "aggregate_pairs: n_pairs = " << n_pairs;
    throw DomainError(os.str());
  }
  Report out = pair_report;
  const double n = static_cast<double>(n_pairs);
  out.internal_energy *= n;
  out.passive_energy *= n;
  out.ergotropy *= n;
  out.w_max *= n;
  return out;
}

}  // namespace qbatt::ergotropy

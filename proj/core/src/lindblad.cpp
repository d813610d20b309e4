#include "qbatt/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbatt/ergotropy.hpp"
#include "qbatt/operators.hpp"

namespace qbatt::lindblad {

namespace {

using linalg::Matrix;
using linalg::Vector;

// step * |L|_1 stability budget for the fixed-step integrator.
constexpr double kStepBudget = 0.1;
constexpr double kStepCoefficient = 0.005;

Matrix build_superoperator(const MarkovParams& p) {
  const Matrix id = Matrix::Identity(4, 4);

  Matrix h = Matrix::Zero(4, 4);
  h += p.detuning * (ops::number_a() + ops::number_b());
  h += p.dipole * (ops::raising_a() * ops::lowering_b() +
                   ops::raising_b() * ops::lowering_a());
  h -= 0.5 * p.drive1 * (ops::raising_a() + ops::lowering_a());
  h -= 0.5 * p.drive2 * (ops::raising_b() + ops::lowering_b());

  // vec(A rho B) = kron(B^T, A) vec(rho), columns stacked.
  Matrix l = linalg::Complex(0.0, -1.0) *
             (linalg::kron(id, h) - linalg::kron(h.transpose(), id));

  const Matrix sm[2] = {ops::lowering_a(), ops::lowering_b()};
  const Matrix sp[2] = {ops::raising_a(), ops::raising_b()};
  const double rates[2][2] = {{p.decay, p.collective_decay},
                              {p.collective_decay, p.decay}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix spsm = sp[i] * sm[j];
      l += rates[i][j] *
           (linalg::kron(sp[i].transpose(), sm[j]) -
            0.5 * (linalg::kron(id, spsm) + linalg::kron(spsm.transpose(), id)));
    }
  }
  return l;
}

void require_pair_state(const linalg::DensityMatrix& rho, const char* who) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << who << ": expected a 4x4 pair state, got " << rho.dim();
    throw DimensionMismatch(os.str());
  }
}

// One classical RK4 step of v' = L v.
Vector rk4_step(const Matrix& l, const Vector& v, double h) {
  const Vector k1 = l * v;
  const Vector k2 = l * (v + 0.5 * h * k1);
  const Vector k3 = l * (v + 0.5 * h * k2);
  const Vector k4 = l * (v + h * k3);
  return v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vector advance(const Matrix& l, Vector v, double interval, double max_step) {
  if (interval == 0.0) {
    return v;
  }
  const auto n = static_cast<long>(std::ceil(interval / max_step));
  const double h = interval / static_cast<double>(n);
  for (long k = 0; k < n; ++k) {
    v = rk4_step(l, v, h);
  }
  return v;
}

std::vector<SeriesPoint> series_impl(const MarkovParams& params,
                                     const linalg::DensityMatrix& rho0,
                                     const std::vector<double>& grid,
                                     double (*figure)(
                                         const linalg::DensityMatrix&)) {
  require_pair_state(rho0, "series");
  const Generator gen(params);
  const double h = gen.default_step();

  double prev = 0.0;
  for (double t : grid) {
    if (!(t >= prev) || !std::isfinite(t)) {
      std::ostringstream os;
      os << "series: grid must be finite, non-negative and non-decreasing "
            "(offending time "
         << t << ")";
      throw DomainError(os.str());
    }
    prev = t;
  }

  std::vector<SeriesPoint> out;
  out.reserve(grid.size());
  Vector v = linalg::vec(rho0.matrix());
  double t_now = 0.0;
  for (double t : grid) {
    v = advance(gen.matrix(), v, t - t_now, h);
    t_now = t;
    const auto rho = linalg::validate_density_matrix(linalg::unvec(v, 4, 4));
    out.push_back(SeriesPoint{t, figure(rho)});
  }
  return out;
}

}  // namespace

void MarkovParams::validate() const {
  for (double x : {detuning, dipole, decay, collective_decay, drive1, drive2,
                   window.tau}) {
    if (!std::isfinite(x)) {
      throw DomainError("MarkovParams: non-finite parameter");
    }
  }
  if (decay < 0.0) {
    std::ostringstream os;
    os << "MarkovParams: decay = " << decay << " must be non-negative";
    throw DomainError(os.str());
  }
  if (collective_decay * collective_decay > decay * decay) {
    std::ostringstream os;
    os << "MarkovParams: |collective_decay| = " << std::abs(collective_decay)
       << " exceeds decay = " << decay
       << "; the dissipator would not be completely positive";
    throw CPViolation(os.str());
  }
  if (window.tau < 0.0) {
    std::ostringstream os;
    os << "MarkovParams: charging window tau = " << window.tau;
    throw DomainError(os.str());
  }
}

Generator::Generator(const MarkovParams& params) : params_(params) {
  params_.validate();
  l_ = build_superoperator(params_);
  norm1_ = linalg::one_norm(l_);

  // The generator must kill the trace functional: <<I| L = 0.
  const Vector id_vec = linalg::vec(Matrix::Identity(4, 4));
  const double trace_residual = (id_vec.adjoint() * l_).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, norm1_);
  if (trace_residual > 1e-12 * scale) {
    std::ostringstream os;
    os << "Generator: trace-preservation residual " << trace_residual;
    throw NumericsError(os.str());
  }
}

double Generator::default_step() const {
  const double rate_scale =
      std::max({params_.decay, std::abs(params_.collective_decay),
                std::abs(params_.dipole), std::abs(params_.drive1),
                std::abs(params_.drive2), std::abs(params_.detuning), 1e-9});
  double h = kStepCoefficient / rate_scale;
  if (h * norm1_ > kStepBudget) {
    h = kStepBudget / norm1_;
  }
  return h;
}

linalg::DensityMatrix evolve(const Generator& gen,
                             const linalg::DensityMatrix& rho0, double t,
                             double step) {
  require_pair_state(rho0, "evolve");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "evolve: time " << t << " must be finite and non-negative";
    throw DomainError(os.str());
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    std::ostringstream os;
    os << "evolve: step " << step << " must be positive";
    throw DomainError(os.str());
  }
  if (step * gen.one_norm() > kStepBudget * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "evolve: step " << step << " gives step * |L|_1 = "
       << step * gen.one_norm() << " > " << kStepBudget;
    throw StepTooLarge(os.str());
  }
  if (t == 0.0) {
    return rho0;
  }
  Vector v = advance(gen.matrix(), linalg::vec(rho0.matrix()), t, step);
  return linalg::validate_density_matrix(linalg::unvec(v, 4, 4));
}

linalg::DensityMatrix exact_propagate(const Generator& gen,
                                      const linalg::DensityMatrix& rho0,
                                      double t) {
  require_pair_state(rho0, "exact_propagate");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "exact_propagate: time " << t << " must be finite and non-negative";
    throw DomainError(os.str());
  }
  const Matrix propagator = linalg::matrix_exponential(gen.matrix(), t);
  const Vector v = propagator * linalg::vec(rho0.matrix());
  return linalg::validate_density_matrix(linalg::unvec(v, 4, 4));
}

std::vector<SeriesPoint> single_cell_series(const MarkovParams& params,
                                            const linalg::DensityMatrix& rho0,
                                            const std::vector<double>& grid) {
  return series_impl(params, rho0, grid, &ergotropy::single_cell);
}

std::vector<SeriesPoint> two_cell_series(const MarkovParams& params,
                                         const linalg::DensityMatrix& rho0,
                                         const std::vector<double>& grid) {
  return series_impl(params, rho0, grid, &ergotropy::two_cell);
}

double dark_state_residual(const MarkovParams& params) {
  const Generator gen(params);
  const auto dark = ops::subradiant_state(1.0 / std::sqrt(2.0));
  const Vector v = linalg::vec(dark.projector());
  return (gen.matrix() * v).cwiseAbs().maxCoeff();
}

}  // namespace qbatt::lindblad

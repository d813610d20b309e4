#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qbatt/errors.hpp"

namespace qbatt::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Validation tolerances.  The state tolerances are loose enough to absorb
// accumulated fixed-step integrator error but still catch genuine trace or
// positivity losses; operator tolerances are tight because operators are
// built analytically.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kEigenvalueFloor = -1e-8;
inline constexpr double kObservableHermTol = 1e-12;
inline constexpr double kUnitNormTol = 1e-12;

bool is_finite(const Matrix& m);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_residual(const Matrix& m);

double one_norm(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

class DensityMatrix;

// Checks Hermiticity, unit trace and positivity (eigenvalue floor) and
// wraps the matrix unchanged; throws the matching invariant violation.
// Dimension must be 2 or 4.
DensityMatrix validate_density_matrix(const Matrix& m);

// A validated quantum state.  Instances only come out of
// validate_density_matrix, so holding one is proof of validity at
// construction time; the stored matrix is the caller's value, not a
// projected copy.
class DensityMatrix {
 public:
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  friend DensityMatrix validate_density_matrix(const Matrix& m);
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

// Hermitian operator (an energy observable, typically).  Rejects matrices
// whose Hermiticity residual exceeds kObservableHermTol.
class HermitianObservable {
 public:
  explicit HermitianObservable(Matrix m);
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

// Unit-norm complex vector.
class PureStateVector {
 public:
  explicit PureStateVector(Vector v);
  const Vector& amplitudes() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  Matrix projector() const { return v_ * v_.adjoint(); }

 private:
  Vector v_;
};

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns; column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
// Throws NonHermitianInput if the residual exceeds kHermitianTol; the
// decomposition itself runs on the symmetrized matrix.
EigenSystem hermitian_eigensystem(const Matrix& m);
EigenSystem hermitian_eigensystem(const DensityMatrix& m);
EigenSystem hermitian_eigensystem(const HermitianObservable& m);

// exp(t * m) by scaling-and-squaring with a Taylor core; exact to close to
// machine precision for the small dense matrices used here (dim <= 16).
Matrix matrix_exponential(const Matrix& m, double t = 1.0);

enum class Subsystem { A, B };

// Trace out one qubit of a two-qubit state (4x4, A = first factor).
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

}  // namespace qbatt::linalg

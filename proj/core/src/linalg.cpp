#include "qbatt/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qbatt::linalg {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << who << ": expected a non-empty square matrix, got " << m.rows()
       << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
}

void require_finite(const Matrix& m, const char* who) {
  if (!is_finite(m)) {
    throw DomainError(std::string(who) + ": matrix has NaN or Inf entries");
  }
}

}  // namespace

bool is_finite(const Matrix& m) {
  return m.allFinite();
}

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double one_norm(const Matrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    std::ostringstream os;
    os << "unvec: vector of size " << v.size() << " cannot fill " << rows
       << "x" << cols;
    throw DimensionMismatch(os.str());
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

DensityMatrix validate_density_matrix(const Matrix& m) {
  require_square(m, "validate_density_matrix");
  if (m.rows() != 2 && m.rows() != 4) {
    std::ostringstream os;
    os << "validate_density_matrix: dimension " << m.rows()
       << " not supported (want 2 or 4)";
    throw DimensionMismatch(os.str());
  }
  require_finite(m, "validate_density_matrix");

  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "state is not Hermitian: residual " << herm;
    throw HermiticityViolation(os.str(), herm);
  }

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    std::ostringstream os;
    os << "state trace deviates from one by " << trace_err;
    throw TraceViolation(os.str(), trace_err);
  }

  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo < kEigenvalueFloor) {
    std::ostringstream os;
    os << "state has negative eigenvalue " << lo;
    throw PositivityViolation(os.str(), lo);
  }

  return DensityMatrix(m);
}

HermitianObservable::HermitianObservable(Matrix m) : m_(std::move(m)) {
  require_square(m_, "HermitianObservable");
  require_finite(m_, "HermitianObservable");
  const double herm = hermiticity_residual(m_);
  if (herm > kObservableHermTol) {
    std::ostringstream os;
    os << "observable is not Hermitian: residual " << herm;
    throw NonHermitianInput(os.str());
  }
}

PureStateVector::PureStateVector(Vector v) : v_(std::move(v)) {
  if (v_.size() == 0) {
    throw DimensionMismatch("PureStateVector: empty vector");
  }
  if (!v_.allFinite()) {
    throw DomainError("PureStateVector: NaN or Inf amplitude");
  }
  const double err = std::abs(v_.norm() - 1.0);
  if (err > kUnitNormTol) {
    std::ostringstream os;
    os << "PureStateVector: norm deviates from one by " << err;
    throw DomainError(os.str());
  }
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  require_square(m, "hermitian_eigensystem");
  require_finite(m, "hermitian_eigensystem");
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eigensystem: input residual " << herm;
    throw NonHermitianInput(os.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw NumericsError("hermitian_eigensystem: eigensolver failed");
  }
  return EigenSystem{es.eigenvalues(), es.eigenvectors()};
}

EigenSystem hermitian_eigensystem(const DensityMatrix& m) {
  return hermitian_eigensystem(m.matrix());
}

EigenSystem hermitian_eigensystem(const HermitianObservable& m) {
  return hermitian_eigensystem(m.matrix());
}

Matrix matrix_exponential(const Matrix& m, double t) {
  require_square(m, "matrix_exponential");
  require_finite(m, "matrix_exponential");
  if (!std::isfinite(t)) {
    throw DomainError("matrix_exponential: non-finite time");
  }

  const Eigen::Index n = m.rows();
  Matrix a = t * m;
  const double norm = one_norm(a);
  if (norm == 0.0) {
    return Matrix::Identity(n, n);
  }

  // Scale so the Taylor series converges fast, then square back.
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  a /= std::pow(2.0, squarings);

  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (one_norm(term) <= 1e-17 * one_norm(sum)) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << "partial_trace: expected a 4x4 pair state, got " << rho.dim() << "x"
       << rho.dim();
    throw DimensionMismatch(os.str());
  }
  const Matrix& r = rho.matrix();
  Matrix out = Matrix::Zero(2, 2);
  // Index = 2*a + b with a, b in {0 = excited, 1 = ground}.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::A) {
          out(i, j) += r(2 * i + k, 2 * j + k);
        } else {
          out(i, j) += r(2 * k + i, 2 * k + j);
        }
      }
    }
  }
  return validate_density_matrix(out);
}

}  // namespace qbatt::linalg

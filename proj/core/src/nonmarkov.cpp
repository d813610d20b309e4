#include "qbatt/nonmarkov.hpp"

#include <cmath>
#include <sstream>

#include "qbatt/operators.hpp"

namespace qbatt::nonmarkov {

namespace {

// Relative half-width of the band treated as the critical point lambda =
// 2 rabi; inside it the analytic limit of the kernel is used.
constexpr double kCriticalBand = 1e-12;

// sin(x)/x and sinh(x)/x with series fallbacks near zero.
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sinhc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
  }
  return std::sinh(x) / x;
}

void require_time(double t, const char* who) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << who << ": time " << t << " must be finite and non-negative";
    throw DomainError(os.str());
  }
}

}  // namespace

LorentzianBath::LorentzianBath(double lambda, double rabi)
    : lambda_(lambda), rabi_(rabi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream os;
    os << "LorentzianBath: lambda = " << lambda << " must be positive";
    throw DomainError(os.str());
  }
  if (!(rabi >= 0.0) || !std::isfinite(rabi)) {
    std::ostringstream os;
    os << "LorentzianBath: rabi = " << rabi << " must be non-negative";
    throw DomainError(os.str());
  }
  if (std::abs(lambda - 2.0 * rabi) <= kCriticalBand * lambda) {
    regime_ = BathRegime::Critical;
  } else if (lambda > 2.0 * rabi) {
    regime_ = BathRegime::Overdamped;
  } else {
    regime_ = BathRegime::Underdamped;
  }
}

double kappa(const LorentzianBath& bath, double t) {
  require_time(t, "kappa");
  if (t == 0.0) {
    return 1.0;
  }
  const double lam = bath.lambda();
  const double half_lt = 0.5 * lam * t;

  switch (bath.regime()) {
    case BathRegime::Critical:
      return std::exp(-half_lt) * (1.0 + half_lt);
    case BathRegime::Overdamped: {
      const double chi =
          std::sqrt((lam - 2.0 * bath.rabi()) * (lam + 2.0 * bath.rabi()));
      const double x = 0.5 * chi * t;
      if (x <= 30.0) {
        return std::exp(-half_lt) * (std::cosh(x) + half_lt * sinhc(x));
      }
      // Large arguments: split into the two decaying exponentials so the
      // cosh never overflows.  Both rates are >= 0 since chi < lambda.
      const double r = lam / chi;
      return 0.5 * ((1.0 + r) * std::exp(x - half_lt) +
                    (1.0 - r) * std::exp(-x - half_lt));
    }
    case BathRegime::Underdamped: {
      const double chi =
          std::sqrt((2.0 * bath.rabi() - lam) * (2.0 * bath.rabi() + lam));
      const double x = 0.5 * chi * t;
      return std::exp(-half_lt) * (std::cos(x) + half_lt * sinc(x));
    }
  }
  throw NumericsError("kappa: unreachable regime");
}

CouplingSplit::CouplingSplit(double c1) : c1_(c1), c2_(0.0) {
  if (!(c1 >= 0.0 && c1 <= 1.0)) {
    std::ostringstream os;
    os << "CouplingSplit: c1 = " << c1 << " outside [0, 1]";
    throw DomainError(os.str());
  }
  c2_ = std::sqrt(1.0 - c1 * c1);
}

CouplingSplit CouplingSplit::from_pair(double c1, double c2) {
  if (!(c1 >= 0.0) || !(c2 >= 0.0) || !std::isfinite(c1) ||
      !std::isfinite(c2)) {
    throw DomainError("CouplingSplit: weights must be non-negative");
  }
  const double err = std::abs(c1 * c1 + c2 * c2 - 1.0);
  if (err > 1e-12) {
    std::ostringstream os;
    os << "CouplingSplit: c1^2 + c2^2 deviates from one by " << err;
    throw DomainError(os.str());
  }
  return CouplingSplit(c1, c2);
}

SingleExcitationState evolve_amplitudes(const LorentzianBath& bath,
                                        const CouplingSplit& split,
                                        std::complex<double> nu01,
                                        std::complex<double> nu02, double t) {
  require_time(t, "evolve_amplitudes");
  const double norm_err = std::abs(std::norm(nu01) + std::norm(nu02) - 1.0);
  if (norm_err > 1e-12) {
    std::ostringstream os;
    os << "evolve_amplitudes: initial weight deviates from one by "
       << norm_err;
    throw DomainError(os.str());
  }
  const double k = kappa(bath, t);
  const double c1 = split.c1();
  const double c2 = split.c2();
  SingleExcitationState s;
  s.t = t;
  s.nu1 = (c2 * c2 + c1 * c1 * k) * nu01 - c1 * c2 * (1.0 - k) * nu02;
  s.nu2 = -c1 * c2 * (1.0 - k) * nu01 + (c1 * c1 + c2 * c2 * k) * nu02;
  return s;
}

SingleExcitationState evolve_subradiant(const LorentzianBath& bath,
                                        const CouplingSplit& split,
                                        double alpha_minus, double t) {
  require_time(t, "evolve_subradiant");
  if (!(alpha_minus >= -1.0 && alpha_minus <= 1.0)) {
    std::ostringstream os;
    os << "evolve_subradiant: alpha_minus = " << alpha_minus
       << " outside [-1, 1]";
    throw DomainError(os.str());
  }
  const double alpha_plus =
      std::sqrt((1.0 - alpha_minus) * (1.0 + alpha_minus));
  const double k = kappa(bath, t);
  const double c1 = split.c1();
  const double c2 = split.c2();
  SingleExcitationState s;
  s.t = t;
  s.nu1 = c2 * alpha_minus + c1 * k * alpha_plus;
  s.nu2 = -c1 * alpha_minus + c2 * k * alpha_plus;
  return s;
}

ReducedStates reduced_states(const SingleExcitationState& s) {
  const double p1 = std::norm(s.nu1);
  const double p2 = std::norm(s.nu2);
  if (p1 + p2 > 1.0 + 1e-10) {
    std::ostringstream os;
    os << "reduced_states: total excitation weight " << p1 + p2
       << " exceeds one";
    throw NumericsError(os.str());
  }
  auto qubit = [](double p) {
    linalg::Matrix m = linalg::Matrix::Zero(2, 2);
    m(0, 0) = p;
    m(1, 1) = 1.0 - p;
    return linalg::validate_density_matrix(m);
  };
  return ReducedStates{qubit(p1), qubit(p2)};
}

EnergyChanges energy_changes(const SingleExcitationState& now,
                             std::complex<double> nu01,
                             std::complex<double> nu02) {
  EnergyChanges de;
  de.charger = kOmega0 * (std::norm(now.nu1) - std::norm(nu01));
  de.battery = kOmega0 * (std::norm(now.nu2) - std::norm(nu02));
  return de;
}

AmplitudeTriple angle_map(double theta1, double theta2) {
  const double half_pi = 2.0 * std::atan(1.0);
  auto check = [half_pi](double th, const char* name) {
    if (!(th >= 0.0 && th <= half_pi)) {
      std::ostringstream os;
      os << "angle_map: " << name << " = " << th << " outside [0, pi/2]";
      throw DomainError(os.str());
    }
  };
  check(theta1, "theta1");
  check(theta2, "theta2");
  AmplitudeTriple a;
  a.nu1 = std::cos(2.0 * theta1);
  a.nu2 = std::sin(2.0 * theta1) * std::sin(2.0 * theta2);
  a.nu_env = std::sin(2.0 * theta1) * std::cos(2.0 * theta2);
  return a;
}

Angles solve_angles(double nu1, double nu2) {
  if (!(nu1 >= -1.0 && nu1 <= 1.0)) {
    std::ostringstream os;
    os << "solve_angles: nu1 = " << nu1 << " outside [-1, 1]";
    throw DomainError(os.str());
  }
  if (!(nu2 >= 0.0)) {
    std::ostringstream os;
    os << "solve_angles: nu2 = " << nu2 << " must be non-negative";
    throw DomainError(os.str());
  }
  const double residual = nu1 * nu1 + nu2 * nu2 - 1.0;
  if (residual > 1e-12) {
    std::ostringstream os;
    os << "solve_angles: nu1^2 + nu2^2 exceeds one by " << residual;
    throw DomainError(os.str());
  }
  Angles out;
  out.theta1 = 0.5 * std::acos(nu1);
  const double s = std::sin(2.0 * out.theta1);
  if (s <= 1e-15) {
    out.theta2 = 0.0;  // poles: theta2 is pure gauge
    return out;
  }
  const double ratio = std::min(nu2 / s, 1.0);
  out.theta2 = 0.5 * std::asin(ratio);
  return out;
}

}  // namespace qbatt::nonmarkov

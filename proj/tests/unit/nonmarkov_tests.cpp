#include <cmath>
#include <random>

#include <doctest.h>

#include "qbatt/ergotropy.hpp"
#include "qbatt/nonmarkov.hpp"

using namespace qbatt;
using nonmarkov::BathRegime;
using nonmarkov::CouplingSplit;
using nonmarkov::LorentzianBath;

namespace {

// High-precision reference values computed with a 30-digit arbitrary
// precision evaluation of the kernel and the amplitude map.
constexpr double kTwoOverE = 0.73575888234288464319;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

}  // namespace

TEST_CASE("bath classification and parameter domain") {
  CHECK(LorentzianBath(1.0, 0.3).regime() == BathRegime::Overdamped);
  CHECK(LorentzianBath(1.0, 30.0).regime() == BathRegime::Underdamped);
  CHECK(LorentzianBath(1.0, 0.5).regime() == BathRegime::Critical);
  CHECK(LorentzianBath(2.0, 1.0).regime() == BathRegime::Critical);
  CHECK_THROWS_AS(LorentzianBath(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(LorentzianBath(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(LorentzianBath(1.0, -0.5), DomainError);
}

TEST_CASE("kernel starts at one and rejects negative times") {
  for (double rabi : {0.0, 0.3, 0.5, 30.0}) {
    const LorentzianBath bath(1.0, rabi);
    CHECK(nonmarkov::kappa(bath, 0.0) == 1.0);
    CHECK_THROWS_AS(nonmarkov::kappa(bath, -0.1), DomainError);
  }
}

TEST_CASE("critical kernel hits the analytic 2/e point") {
  const LorentzianBath bath(1.0, 0.5);
  CHECK(std::abs(nonmarkov::kappa(bath, 2.0) - kTwoOverE) < 1e-14);
  // Same dimensionless point with a rescaled bath
  const LorentzianBath bath2(2.0, 1.0);
  CHECK(std::abs(nonmarkov::kappa(bath2, 1.0) - kTwoOverE) < 1e-14);
}

TEST_CASE("kernel matches frozen high-precision references") {
  // Underdamped
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 30.0), 0.3) -
                 (-0.77784399608574714716)) < 1e-13);
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 2.0), 1.7) -
                 (-0.43912723533373891186)) < 1e-13);
  // Overdamped
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 0.3), 2.5) -
                 0.86297597788509743468) < 1e-13);
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 0.3), 20.0) -
                 0.15225219173744181029) < 1e-13);
}

TEST_CASE("deep overdamped tail stays finite and accurate") {
  // The naive cosh form would overflow at chi t / 2 = 800.
  const double k = nonmarkov::kappa(LorentzianBath(1.0, 0.3), 2000.0);
  CHECK(std::isfinite(k));
  CHECK(k > 0.0);
  CHECK(k == doctest::Approx(1.556883592578829722e-87).epsilon(1e-9));
}

TEST_CASE("underdamped tail keeps absolute accuracy") {
  const double k = nonmarkov::kappa(LorentzianBath(1.0, 30.0), 50.0);
  CHECK(k == doctest::Approx(-4.5732165049265452491e-12).epsilon(1e-7));
}

TEST_CASE("kernel is continuous across the critical seam") {
  const LorentzianBath just_over(1.0, 0.5 - 5e-7);
  const LorentzianBath just_under(1.0, 0.5 + 5e-7);
  CHECK(just_over.regime() == BathRegime::Overdamped);
  CHECK(just_under.regime() == BathRegime::Underdamped);
  const double k_over = nonmarkov::kappa(just_over, 2.0);
  const double k_under = nonmarkov::kappa(just_under, 2.0);
  CHECK(std::abs(k_over - 0.73575937284863452797) < 1e-12);
  CHECK(std::abs(k_under - 0.73575839183679140426) < 1e-12);
  CHECK(std::abs(k_over - k_under) < 1e-6);
  CHECK(std::abs(k_over - kTwoOverE) < 1e-6);
  // Continuity holds along the whole horizon, not just one point.  The gap
  // is derivative-limited: |dk/dR| peaks near 1.4 around t = 8, so a 1e-6
  // spread in R can move the kernel by up to ~1.4e-6.
  for (double t = 0.0; t <= 20.0; t += 0.25) {
    CHECK(std::abs(nonmarkov::kappa(just_over, t) -
                   nonmarkov::kappa(just_under, t)) < 2e-6);
  }
}

TEST_CASE("underdamped extrema sit at half-period multiples") {
  // First minimum at chi~ t / 2 = pi: kappa = -exp(-pi lambda / (2 chi~)).
  const double chi500 = std::sqrt(4.0 * 500.0 * 500.0 - 1.0);
  const double t500 = 2.0 * M_PI / chi500;
  CHECK(std::abs(t500 - 0.0062831884487745962632) < 1e-16);
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 500.0), t500) -
                 (-0.99686333541908369346)) < 1e-12);

  const double chi30 = std::sqrt(4.0 * 30.0 * 30.0 - 1.0);
  const double t30 = 2.0 * M_PI / chi30;
  CHECK(std::abs(t30 - 0.10473430256088014684) < 1e-15);
  CHECK(std::abs(nonmarkov::kappa(LorentzianBath(1.0, 30.0), t30) -
                 (-0.94898038351083491086)) < 1e-12);
}

TEST_CASE("amplitude map reproduces the fast-swap references") {
  const LorentzianBath bath(1.0, 500.0);
  const CouplingSplit split(kInvSqrt2);
  const double t_star = 0.0062831884487745962632;
  const auto s = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, t_star);
  CHECK(std::abs(std::norm(s.nu2) - 0.99686579508525698718) < 1e-12);
  CHECK(std::abs(std::norm(s.nu1) - 2.4596661732937172307e-6) < 1e-14);

  const auto de = nonmarkov::energy_changes(s, 1.0, 0.0);
  CHECK(std::abs(-de.charger - 0.99999754033382670628) < 1e-12);
  CHECK(std::abs(de.battery - 0.99686579508525698718) < 1e-12);
  CHECK(std::abs((-de.charger) - de.battery - 0.0031317452485697191032) <
        1e-12);
}

TEST_CASE("battery peak population and ergotropy in the strong regime") {
  const LorentzianBath bath(1.0, 30.0);
  const CouplingSplit split(kInvSqrt2);
  const double t_star = 0.10473430256088014684;
  const auto s = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, t_star);
  const double p = std::norm(s.nu2);
  CHECK(std::abs(p - 0.94963113382751028243) < 1e-12);
  CHECK(std::abs(ergotropy::two_level(p) - 0.89926226765502056485) < 1e-12);
}

TEST_CASE("entangled start beats the separable one at the first trough") {
  const LorentzianBath bath(1.0, 30.0);
  const CouplingSplit split(kHalfSqrt3);
  const double t_star = 0.10473430256088014684;
  const auto s = nonmarkov::evolve_subradiant(bath, split, kHalfSqrt3, t_star);
  CHECK(std::abs(std::norm(s.nu2) - 0.97465287933458629832) < 1e-12);
  CHECK(std::abs(ergotropy::two_level(std::norm(s.nu2)) -
                 0.94930575866917259664) < 1e-12);
}

TEST_CASE("long-time plateau of the entangled start") {
  const LorentzianBath bath(1.0, 30.0);
  const CouplingSplit split(kHalfSqrt3);
  const auto s = nonmarkov::evolve_subradiant(bath, split, kHalfSqrt3, 50.0);
  CHECK(std::abs(ergotropy::two_level(std::norm(s.nu2)) -
                 0.12500000000342991238) < 1e-12);
}

TEST_CASE("weak-coupling energy flow stalls at one quarter") {
  const LorentzianBath bath(1.0, 0.3);
  const CouplingSplit split(kInvSqrt2);
  const auto s20 = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, 20.0);
  const auto de20 = nonmarkov::energy_changes(s20, 1.0, 0.0);
  CHECK(std::abs(de20.battery - 0.17966908660349278092) < 1e-12);
  CHECK(std::abs(-de20.charger - 0.66807872165906540879) < 1e-12);

  const auto s200 = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, 200.0);
  const auto de200 = nonmarkov::energy_changes(s200, 1.0, 0.0);
  CHECK(std::abs(de200.battery - 0.24999999884060108872) < 1e-12);
  CHECK(std::abs(de200.battery - 0.25) < 1e-6);
  // Ergotropy stays zero the whole way down here
  CHECK(ergotropy::two_level(std::norm(s200.nu2)) == 0.0);
}

TEST_CASE("subradiant combination is frozen by the dynamics") {
  std::mt19937_64 rng(9301);
  std::uniform_real_distribution<double> uc(0.0, 1.0);
  std::uniform_real_distribution<double> ut(0.0, 10.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double c1 = uc(rng);
    const CouplingSplit split(c1);
    const LorentzianBath bath(1.0, 3.0);
    const double t = ut(rng);
    // Initial state proportional to (c2, -c1): exactly the frozen direction
    const auto s = nonmarkov::evolve_amplitudes(bath, split, split.c2(),
                                                -split.c1(), t);
    CHECK(std::abs(s.nu1 - std::complex<double>(split.c2(), 0.0)) < 1e-12);
    CHECK(std::abs(s.nu2 - std::complex<double>(-split.c1(), 0.0)) < 1e-12);
  }
}

TEST_CASE("amplitude map and subradiant decomposition agree") {
  std::mt19937_64 rng(9302);
  std::uniform_real_distribution<double> uc(0.0, 1.0);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  std::uniform_real_distribution<double> ut(0.0, 20.0);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const double c1 = uc(rng);
    const double am = ua(rng);
    const double t = ut(rng);
    const CouplingSplit split(c1);
    const LorentzianBath bath(1.0, 5.0);
    const double ap = std::sqrt((1.0 - am) * (1.0 + am));
    const std::complex<double> nu01 = split.c2() * am + split.c1() * ap;
    const std::complex<double> nu02 = -split.c1() * am + split.c2() * ap;
    const auto via_amp =
        nonmarkov::evolve_amplitudes(bath, split, nu01, nu02, t);
    const auto via_sub = nonmarkov::evolve_subradiant(bath, split, am, t);
    worst = std::max(worst, std::abs(via_amp.nu1 - via_sub.nu1));
    worst = std::max(worst, std::abs(via_amp.nu2 - via_sub.nu2));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("reduced states are valid and carry the amplitude populations") {
  const LorentzianBath bath(1.0, 30.0);
  const CouplingSplit split(kInvSqrt2);
  const auto s = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, 0.07);
  const auto red = nonmarkov::reduced_states(s);
  CHECK(red.charger.matrix()(0, 0).real() ==
        doctest::Approx(std::norm(s.nu1)).epsilon(1e-14));
  CHECK(red.battery.matrix()(0, 0).real() ==
        doctest::Approx(std::norm(s.nu2)).epsilon(1e-14));
  CHECK(std::abs(red.charger.matrix().trace().real() - 1.0) < 1e-14);
  CHECK(std::abs(red.battery.matrix().trace().real() - 1.0) < 1e-14);
}

TEST_CASE("reduced_states rejects overweight excitation") {
  nonmarkov::SingleExcitationState bad;
  bad.nu1 = 0.9;
  bad.nu2 = 0.8;
  CHECK_THROWS_AS(nonmarkov::reduced_states(bad), NumericsError);
}

TEST_CASE("evolve_amplitudes validates its inputs") {
  const LorentzianBath bath(1.0, 1.0);
  const CouplingSplit split(0.5);
  CHECK_THROWS_AS(nonmarkov::evolve_amplitudes(bath, split, 1.0, 1.0, 0.1),
                  DomainError);
  CHECK_THROWS_AS(nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, -0.1),
                  DomainError);
  CHECK_THROWS_AS(nonmarkov::evolve_subradiant(bath, split, 1.5, 0.1),
                  DomainError);
  CHECK_THROWS_AS(CouplingSplit(1.0001), DomainError);
  CHECK_THROWS_AS(CouplingSplit::from_pair(0.8, 0.7), DomainError);
  CHECK_NOTHROW(CouplingSplit::from_pair(0.6, 0.8));
}

TEST_CASE("angle map and its inverse round-trip") {
  // The fully swapped point: theta1 = theta2 = pi/4 puts everything on nu2.
  const auto a = nonmarkov::angle_map(M_PI / 4.0, M_PI / 4.0);
  CHECK(std::abs(a.nu1) < 1e-15);
  CHECK(a.nu2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(a.nu_env) < 1e-15);

  std::mt19937_64 rng(9303);
  std::uniform_real_distribution<double> uth(0.0, M_PI / 2.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double th1 = uth(rng);
    const double th2 = 0.5 * uth(rng);  // keep nu_env >= 0 (principal branch)
    const auto triple = nonmarkov::angle_map(th1, th2);
    if (triple.nu2 < 0.0) {
      continue;  // inverse is defined for non-negative nu2
    }
    const auto back = nonmarkov::solve_angles(triple.nu1, triple.nu2);
    const auto again = nonmarkov::angle_map(back.theta1, back.theta2);
    CHECK(std::abs(again.nu1 - triple.nu1) < 1e-12);
    CHECK(std::abs(again.nu2 - triple.nu2) < 1e-12);
  }
}

TEST_CASE("solve_angles rejects infeasible targets and handles poles") {
  CHECK_THROWS_AS(nonmarkov::solve_angles(0.8, 0.7), DomainError);
  CHECK_THROWS_AS(nonmarkov::solve_angles(1.2, 0.0), DomainError);
  CHECK_THROWS_AS(nonmarkov::solve_angles(0.0, -0.1), DomainError);
  const auto pole = nonmarkov::solve_angles(1.0, 0.0);
  CHECK(pole.theta1 == doctest::Approx(0.0));
  CHECK(pole.theta2 == doctest::Approx(0.0));
  const auto anti = nonmarkov::solve_angles(-1.0, 0.0);
  CHECK(anti.theta1 == doctest::Approx(M_PI / 2.0));
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "cheshire/analysis.hpp"
#include "cheshire/weak.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace cheshire;

namespace {

const double k20 = deg_to_rad(20.0);

// Weak values computed in the oracle's S_x basis: psi_i = (|+>_I + |->_II)/sqrt2,
// psi_f = (|->_I + |->_II)/sqrt2, sigma_z swaps + and -.
struct OracleWeak {
  double pi_I, pi_II, sigma_pi_I, sigma_pi_II;
};

OracleWeak oracle_weak_values() {
  const double r = 1.0 / std::sqrt(2.0);
  const oracle::Spin plus{1.0, 0.0}, minus{0.0, 1.0};
  auto dot = [](const oracle::Spin& a, const oracle::Spin& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
  };
  auto swap = [](const oracle::Spin& s) { return oracle::Spin{s[1], s[0]}; };
  // <psi_f| X |psi_i> per path, psi_f has |-> on both arms
  const oracle::C overlap = r * r * (dot(minus, plus) + dot(minus, minus));
  const oracle::C pi_I = r * r * dot(minus, plus) / overlap;
  const oracle::C pi_II = r * r * dot(minus, minus) / overlap;
  const oracle::C s_I = r * r * dot(minus, swap(plus)) / overlap;
  const oracle::C s_II = r * r * dot(minus, swap(minus)) / overlap;
  return {pi_I.real(), pi_II.real(), s_I.real(), s_II.real()};
}

}  // namespace

TEST_CASE("weak_value examples") {
  const JointState psi_i = initial_state();
  const JointState psi_f = postselection_state();
  CHECK(std::abs(weak_value(JointOperator::identity(), psi_i, psi_f) - 1.0) < 1e-15);

  const WeakValueSet wv = weak_values();
  CHECK(std::abs(wv.pi_I) < 1e-12);
  CHECK(std::abs(wv.pi_II - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(wv.sigma_pi_I) - 1.0) < 1e-12);
  CHECK(std::abs(wv.sigma_pi_II) < 1e-12);

  const OracleWeak o = oracle_weak_values();
  CHECK(std::abs(wv.pi_I - o.pi_I) < 1e-12);
  CHECK(std::abs(wv.pi_II - o.pi_II) < 1e-12);
  CHECK(std::abs(wv.sigma_pi_I - o.sigma_pi_I) < 1e-12);
  CHECK(std::abs(wv.sigma_pi_II - o.sigma_pi_II) < 1e-12);
}

TEST_CASE("weak_value rejects orthogonal post-selection") {
  const JointState a = JointState::product(sx_plus(), Path::I);
  const JointState b = JointState::product(sx_minus(), Path::I);
  CHECK_THROWS_AS(weak_value(JointOperator::identity(), a, b), DegeneratePostselection);
}

TEST_CASE("weakvalue_intensity examples") {
  const WeakValueSet wv = weak_values();
  const double ref = kReferenceIntensity;
  for (double a : {0.05, 0.2, k20}) {
    CHECK(weakvalue_intensity(RotationAngle(a), Path::II, wv, ref) ==
          doctest::Approx(ref * (1 - a * a / 4)).epsilon(1e-14));
    CHECK(weakvalue_intensity(RotationAngle(a), Path::I, wv, ref) ==
          doctest::Approx(ref * (1 + a * a / 4)).epsilon(1e-14));
  }
  CHECK(weakvalue_intensity(RotationAngle(0.0), Path::I, wv, ref) == ref);
}

TEST_CASE("projective spin expectation is zero everywhere") {
  CHECK(projective_spin_expectation(Path::I) == doctest::Approx(0.0));
  CHECK(std::abs(projective_spin_expectation(Path::I)) < 1e-15);
  CHECK(std::abs(projective_spin_expectation(Path::II)) < 1e-15);

  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> a(-6.0, 6.0), chi(-6.0, 6.0), t(0.05, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Path p = trial % 2 ? Path::I : Path::II;
    const Scenario magnet = magnet_scenario(p, a(gen), static_cast<Truncation>(trial % 3), chi(gen));
    const Scenario absorbed = absorber_scenario(p, t(gen), chi(gen));
    for (Path q : {Path::I, Path::II}) {
      CHECK(std::abs(projective_spin_expectation(q, magnet)) < 1e-15);
      CHECK(std::abs(projective_spin_expectation(q, absorbed)) < 1e-15);
    }
  }
  CHECK_THROWS_AS(projective_spin_expectation(Path::II, absorber_scenario(Path::II, 0.0)),
                  std::domain_error);
}

TEST_CASE("estimate_sigma_pi") {
  const double ref = kReferenceIntensity;
  const double a = 0.1;
  auto e = estimate_sigma_pi(ref * (1 + a * a / 4), ref, RotationAngle(a), 0.0);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.source == EstimateSource::MagnetInversion);
  e = estimate_sigma_pi(ref * (1 - a * a / 4), ref, RotationAngle(a), 1.0);
  CHECK(e.value < 1e-6);

  const double i_mag = run(magnet_scenario(Path::I, k20)).norm(Detector::OSelected);
  // frozen: sqrt((4/a^2) sin^2(a/2)) at a = 20 deg
  e = estimate_sigma_pi(i_mag, ref, RotationAngle(k20), 0.0);
  CHECK(e.value == doctest::Approx(0.9949307700452987).epsilon(1e-12));
  CHECK(std::abs(e.value - 1.0) < 0.01);

  CHECK_THROWS_AS(estimate_sigma_pi(ref, ref, RotationAngle(0.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_sigma_pi(0.2, ref, RotationAngle(0.1), 0.0), InconsistentIntensities);
  CHECK_THROWS_AS(estimate_sigma_pi(ref, 0.0, RotationAngle(0.1), 0.0), std::invalid_argument);
}

TEST_CASE("estimate_sigma_pi uncertainty propagation") {
  const double ref = 0.25, a = 0.2, i_mag = 0.26;
  const double s_mag = 1e-3, s_ref = 2e-3;
  const auto e = estimate_sigma_pi(i_mag, ref, RotationAngle(a), 0.0, s_mag, s_ref);
  // finite-difference oracle for the squared estimate
  auto sq = [&](double im, double ir) { return 4 / (a * a) * (im / ir - 1); };
  const double h = 1e-7;
  const double d_mag = (sq(i_mag + h, ref) - sq(i_mag - h, ref)) / (2 * h);
  const double d_ref = (sq(i_mag, ref + h) - sq(i_mag, ref - h)) / (2 * h);
  const double sigma_sq = std::hypot(d_mag * s_mag, d_ref * s_ref);
  CHECK(e.uncertainty == doctest::Approx(sigma_sq / (2 * e.value)).epsilon(1e-6));

  const auto zero = estimate_sigma_pi(ref * (1 - a * a / 4), ref, RotationAngle(a), 1.0, s_mag, 0.0);
  CHECK(zero.uncertainty >= 0.0);
  CHECK(std::isfinite(zero.uncertainty));
}

TEST_CASE("estimate_pi_from_absorber") {
  const double ref = kReferenceIntensity;
  auto e = estimate_pi_from_absorber(ref, ref, Transmissivity(0.5));
  CHECK(e.value == 0.0);
  CHECK(e.source == EstimateSource::AbsorberInversion);

  e = estimate_pi_from_absorber(0.9025 * ref, ref, Transmissivity(0.9025));
  CHECK(e.value == doctest::Approx(0.975).epsilon(1e-12));

  double prev = 0.0;
  for (double t : {0.9, 0.99, 0.999, 0.9999}) {
    const double i_abs = run(absorber_scenario(Path::II, t)).norm(Detector::OSelected);
    const double v = estimate_pi_from_absorber(i_abs, ref, Transmissivity(t)).value;
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-4));

  const auto u = estimate_pi_from_absorber(0.2, ref, Transmissivity(0.64), 0.001, 0.0);
  CHECK(u.uncertainty == doctest::Approx(0.001 / ref / (2 * 0.2)).epsilon(1e-12));

  CHECK_THROWS_AS(estimate_pi_from_absorber(ref, ref, Transmissivity(1.0)), std::invalid_argument);
}

TEST_CASE("all-orders inversion recovers the weak values exactly") {
  for (double a : {0.05, k20, 1.0}) {
    const double i1 = run(magnet_scenario(Path::I, a)).norm(Detector::OSelected);
    const double i2 = run(magnet_scenario(Path::II, a)).norm(Detector::OSelected);
    CHECK(sigma_pi_squared_all_orders(i1, 0.25, RotationAngle(a), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(sigma_pi_squared_all_orders(i2, 0.25, RotationAngle(a), 1.0)) < 1e-10);
  }
}

TEST_CASE("property: tautology error scales as alpha^4") {
  const WeakValueSet wv = weak_values();
  const std::vector<double> grid = logspace(0.01, 0.3, 50);
  for (Path p : {Path::I, Path::II}) {
    std::vector<double> err;
    for (double a : grid)
      err.push_back(std::abs(weakvalue_intensity(RotationAngle(a), p, wv, 0.25) -
                             run(magnet_scenario(p, a)).norm(Detector::OSelected)));
    CHECK(std::abs(fit_loglog_slope(grid, err) - 4.0) <= 0.2);
  }
}

TEST_CASE("property: weak value functional is linear") {
  std::mt19937_64 gen(42);
  const JointState psi_i = initial_state(), psi_f = postselection_state();
  for (int trial = 0; trial < 200; ++trial) {
    const JointOperator a = testutil::random_operator(gen), b = testutil::random_operator(gen);
    const Complex lhs = weak_value(a + b, psi_i, psi_f);
    const Complex rhs = weak_value(a, psi_i, psi_f) + weak_value(b, psi_i, psi_f);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("property: path projectors resolve the identity") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 200; ++trial) {
    const JointState psi_i = testutil::random_state(gen), psi_f = testutil::random_state(gen);
    if (std::abs(inner(psi_f, psi_i)) < 1e-3) continue;
    const WeakValueSet wv = weak_values(psi_i, psi_f);
    CHECK(std::abs(wv.pi_I + wv.pi_II - 1.0) < 1e-12);
  }
}

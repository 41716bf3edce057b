#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "cheshire/analysis.hpp"
#include "cheshire/experiment.hpp"
#include "oracle.hpp"

using namespace cheshire;

namespace {

constexpr double kPi = std::numbers::pi;
const double k20 = deg_to_rad(20.0);

oracle::Order to_oracle(Truncation t) {
  switch (t) {
    case Truncation::Linear:
      return oracle::Order::Linear;
    case Truncation::Quadratic:
      return oracle::Order::Quadratic;
    default:
      return oracle::Order::Exact;
  }
}

}  // namespace

TEST_CASE("initial and post-selected states") {
  const JointState psi_i = initial_state();
  const JointState psi_f = postselection_state();
  CHECK(norm2(psi_i) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm2(psi_f) == doctest::Approx(1.0).epsilon(1e-15));

  const double r = 1.0 / std::sqrt(2.0);
  const JointOperator proj_I = tensor(identity2(), path_projector2(Path::I));
  const JointOperator proj_II = tensor(identity2(), path_projector2(Path::II));
  CHECK(max_abs_diff(apply(proj_I, psi_i), JointState::product(sx_plus(), Path::I) * Complex{r}) <
        1e-15);
  CHECK(max_abs_diff(apply(proj_II, psi_i), JointState::product(sx_minus(), Path::II) * Complex{r}) <
        1e-15);

  CHECK(std::abs(inner(psi_f, psi_i) - 0.5) < 1e-15);
  CHECK(std::abs(inner(JointState::product(sx_plus(), Path::I), psi_f)) < 1e-15);
}

TEST_CASE("run examples") {
  const RunResult ref = run(reference_scenario());
  CHECK(ref.norm(Detector::OSelected) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ref.at(Detector::OSelected).intensity_cps == doctest::Approx(11.25).epsilon(1e-14));

  const RunResult m2 = run(magnet_scenario(Path::II, k20));
  CHECK(std::abs(m2.at(Detector::OSelected).intensity_cps - 10.91) < 0.005);
  const RunResult m1 = run(magnet_scenario(Path::I, k20));
  CHECK(std::abs(m1.at(Detector::OSelected).intensity_cps - 11.59) < 0.005);

  for (double t : {0.0, 0.3, 0.77, 1.0})
    CHECK(run(absorber_scenario(Path::I, t)).norm(Detector::OSelected) ==
          doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(absorber_scenario(Path::I, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(run(reference_scenario(), -1.0), std::invalid_argument);
}

TEST_CASE("records carry the cps scale") {
  const RunResult r = run(magnet_scenario(Path::I, 0.7, Truncation::Exact, 0.3), 20.0);
  for (Detector d : kAllDetectors) {
    CHECK(r.at(d).detector == d);
    CHECK(r.at(d).scale_ref_cps == 20.0);
    CHECK(r.at(d).intensity_cps == doctest::Approx(r.norm(d) * 20.0 / 0.25).epsilon(1e-15));
    CHECK(r.at(d).intensity_norm >= 0.0);
  }
  CHECK(r.norm(Detector::OSelected) <= r.norm(Detector::OUnselected));
}

TEST_CASE("closed_form_O") {
  CHECK(closed_form_O(magnet_scenario(Path::II, k20, Truncation::Exact, 1.3)) ==
        doctest::Approx(0.25 * std::pow(std::cos(k20 / 2), 2)).epsilon(1e-15));
  CHECK(closed_form_O(magnet_scenario(Path::I, 0.0)) == doctest::Approx(0.25).epsilon(1e-15));
  // frozen from the closed form 1/4 (3 - cos 20 deg)/2
  CHECK(closed_form_O(magnet_scenario(Path::I, k20)) ==
        doctest::Approx(0.25753842240176145).epsilon(1e-14));

  CHECK_THROWS_AS(closed_form_O(reference_scenario()), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_O(absorber_scenario(Path::II, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_O(magnet_scenario(Path::II, 0.2, Truncation::Linear)),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_O(magnet_scenario(Path::I, 0.2, Truncation::Exact, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("property: closed form equals run on a 50-point alpha grid") {
  for (double a : linspace(0.0, 2 * kPi, 50)) {
    for (Path p : {Path::I, Path::II}) {
      const Scenario sc = magnet_scenario(p, a);
      CHECK(std::abs(closed_form_O(sc) - run(sc).norm(Detector::OSelected)) < 1e-12);
    }
  }
}

TEST_CASE("property: run agrees with the independent S_x-basis oracle") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> chi(-7.0, 7.0), alpha(-4.0, 4.0), t(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double c = chi(gen);
    Scenario sc;
    oracle::Intensities want{};
    switch (trial % 5) {
      case 0:
        sc = reference_scenario(c);
        want = oracle::simulate(oracle::Kind::None, 0.0, c);
        break;
      case 1: {
        const double tt = t(gen);
        sc = absorber_scenario(Path::I, tt, c);
        want = oracle::simulate(oracle::Kind::AbsorberI, tt, c);
        break;
      }
      case 2: {
        const double tt = t(gen);
        sc = absorber_scenario(Path::II, tt, c);
        want = oracle::simulate(oracle::Kind::AbsorberII, tt, c);
        break;
      }
      default: {
        const double a = alpha(gen);
        const auto trunc = static_cast<Truncation>(trial % 3);
        const Path p = trial % 5 == 3 ? Path::I : Path::II;
        sc = magnet_scenario(p, a, trunc, c);
        want = oracle::simulate(p == Path::I ? oracle::Kind::MagnetI : oracle::Kind::MagnetII, a, c,
                                to_oracle(trunc));
      }
    }
    const RunResult got = run(sc);
    CHECK(got.norm(Detector::OSelected) == doctest::Approx(want.o_selected).epsilon(1e-12));
    CHECK(got.norm(Detector::OUnselected) == doctest::Approx(want.o_unselected).epsilon(1e-12));
    CHECK(got.norm(Detector::H) == doctest::Approx(want.h).epsilon(1e-12));
  }
}

TEST_CASE("sweeps") {
  const std::vector<double> chi = linspace(0.0, 2 * kPi, 361);

  SUBCASE("magnet on path II is chi independent") {
    const auto rs = sweep_chi(magnet_scenario(Path::II, k20), chi);
    REQUIRE(rs.size() == chi.size());
    std::vector<double> o;
    for (const auto& r : rs) o.push_back(r.norm(Detector::OSelected));
    const double mean = std::accumulate(o.begin(), o.end(), 0.0) / o.size();
    double var = 0.0;
    for (double x : o) var += (x - mean) * (x - mean);
    CHECK(var / o.size() < 1e-24);
  }

  SUBCASE("magnet on path I oscillates around 1/4 (1 + sin^2(alpha/2))") {
    const auto rs = sweep_chi(magnet_scenario(Path::I, k20), chi);
    double sum = 0.0;
    // drop the duplicated endpoint 2 pi for the period mean
    for (std::size_t k = 0; k + 1 < rs.size(); ++k) sum += rs[k].norm(Detector::OSelected);
    CHECK(sum / (rs.size() - 1) == doctest::Approx(0.25753842240176145).epsilon(1e-12));
    CHECK(rs.front().norm(Detector::OSelected) ==
          doctest::Approx(rs.back().norm(Detector::OSelected)).epsilon(1e-12));
    const auto [lo, hi] = std::minmax_element(rs.begin(), rs.end(), [](auto& a, auto& b) {
      return a.norm(Detector::OSelected) < b.norm(Detector::OSelected);
    });
    CHECK(hi->norm(Detector::OSelected) - lo->norm(Detector::OSelected) > 0.05);
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(rs[k].scenario.chi == chi[k]);
  }

  SUBCASE("no insertion: arms carry orthogonal spins, so H is flat and O + H = 1") {
    const auto rs = sweep_chi(reference_scenario(), chi);
    for (const auto& r : rs) {
      CHECK(r.norm(Detector::H) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(r.norm(Detector::OUnselected) + r.norm(Detector::H) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("magnet on path II: H oscillates, O + H constant") {
    const auto rs = sweep_chi(magnet_scenario(Path::II, k20), chi);
    double hmin = 1.0, hmax = 0.0;
    for (const auto& r : rs) {
      hmin = std::min(hmin, r.norm(Detector::H));
      hmax = std::max(hmax, r.norm(Detector::H));
      CHECK(r.norm(Detector::OUnselected) + r.norm(Detector::H) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
    // |+> interference between the arms: swing 2 sin(alpha/2) * 1/2
    CHECK(hmax - hmin == doctest::Approx(std::sin(k20 / 2)).epsilon(1e-6));
  }

  SUBCASE("alpha sweep") {
    const std::vector<double> grid = logspace(0.01, 0.3, 50);
    const auto rs = sweep_alpha(magnet_scenario(Path::II, 1.0, Truncation::Linear), grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::get<MagnetInsertion>(rs[k].scenario.insertion).alpha.radians() == grid[k]);
      CHECK(rs[k].norm(Detector::OSelected) == doctest::Approx(0.25).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sweep_alpha(reference_scenario(), grid), std::invalid_argument);
  }

  CHECK_THROWS_AS(sweep_chi(reference_scenario(), std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_chi(reference_scenario(), std::vector<double>{0.0, NAN}),
                  std::invalid_argument);
}

TEST_CASE("property: probability conservation") {
  std::mt19937_64 gen(32);
  std::uniform_real_distribution<double> chi(-7.0, 7.0), a(-5.0, 5.0), t(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = chi(gen);
    const Scenario unitary = magnet_scenario(trial % 2 ? Path::I : Path::II, a(gen),
                                             Truncation::Exact, c);
    const RunResult u = run(unitary);
    CHECK(u.norm(Detector::OUnselected) + u.norm(Detector::H) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const Scenario absorbed = absorber_scenario(trial % 2 ? Path::I : Path::II, t(gen), c);
    const RunResult r = run(absorbed);
    CHECK(r.norm(Detector::OUnselected) + r.norm(Detector::H) ==
          doctest::Approx(norm2(apply(insertion_operator(absorbed.insertion), initial_state())))
              .epsilon(1e-12));
  }
}

TEST_CASE("property: absorber response is linear in T on path II, flat on path I") {
  for (double t : linspace(0.0, 1.0, 41)) {
    CHECK(std::abs(run(absorber_scenario(Path::II, t)).norm(Detector::OSelected) - 0.25 * t) <
          1e-15);
    CHECK(std::abs(run(absorber_scenario(Path::I, t)).norm(Detector::OSelected) - 0.25) < 1e-15);
  }
}

TEST_CASE("property: small-alpha expansions have quartic residuals") {
  const std::vector<double> grid = logspace(0.01, 0.3, 30);
  std::vector<double> res_II, res_I;
  for (double a : grid) {
    res_II.push_back(std::abs(run(magnet_scenario(Path::II, a)).norm(Detector::OSelected) -
                              0.25 * (1 - a * a / 4)));
    res_I.push_back(std::abs(run(magnet_scenario(Path::I, a)).norm(Detector::OSelected) -
                             0.25 * (1 + a * a / 4)));
  }
  CHECK(fit_loglog_slope(grid, res_II) == doctest::Approx(4.0).epsilon(0.05));
  CHECK(fit_loglog_slope(grid, res_I) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("grids") {
  const auto g = linspace(0.0, 1.0, 5);
  CHECK(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto l = logspace(0.01, 1.0, 3);
  CHECK(l[0] == 0.01);
  CHECK(l[1] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(l[2] == 1.0);
  CHECK_THROWS_AS(logspace(0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

#include "cheshire/analysis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cheshire {

double fit_loglog_slope(std::span<const double> x, std::span<const double> y, double floor) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog_slope: size mismatch");
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(y[k] >= floor) || !(x[k] > 0.0)) continue;
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    n += 1;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom <= 0.0)
    throw std::domain_error("fit_loglog_slope: fewer than two resolvable points");
  return (n * sxy - sx * sy) / denom;
}

TruncationReport truncation_scan(Path path, std::span<const double> alpha_grid) {
  if (alpha_grid.size() < 10)
    throw std::invalid_argument("truncation_scan: grid needs at least 10 points");
  for (double a : alpha_grid)
    if (!(a > 0.0) || !std::isfinite(a))
      throw std::invalid_argument("truncation_scan: grid values must be positive and finite");

  TruncationReport rep{path, {alpha_grid.begin(), alpha_grid.end()}, {}, {}, {}, 0.0, 0.0};
  const auto o_sel = [path](double a, Truncation t) {
    return run(magnet_scenario(path, a, t)).norm(Detector::OSelected);
  };
  std::vector<double> err_lin, err_quad;
  for (double a : alpha_grid) {
    rep.i_exact.push_back(o_sel(a, Truncation::Exact));
    rep.i_linear.push_back(o_sel(a, Truncation::Linear));
    rep.i_quadratic.push_back(o_sel(a, Truncation::Quadratic));
    err_lin.push_back(std::abs(rep.i_linear.back() - rep.i_exact.back()));
    err_quad.push_back(std::abs(rep.i_quadratic.back() - rep.i_exact.back()));
  }
  rep.linear_error_exponent = fit_loglog_slope(rep.alpha, err_lin);
  rep.quadratic_error_exponent = fit_loglog_slope(rep.alpha, err_quad);
  return rep;
}

CheshireWitness cheshire_witness(RotationAngle alpha) {
  if (!(alpha.radians() > 0.0)) throw std::invalid_argument("cheshire_witness: alpha must be > 0");
  const double ref = run(reference_scenario()).norm(Detector::OSelected);
  const auto deficit = [&](Truncation t) {
    return ref - run(magnet_scenario(Path::II, alpha.radians(), t)).norm(Detector::OSelected);
  };
  return {deficit(Truncation::Linear), deficit(Truncation::Quadratic), deficit(Truncation::Exact)};
}

CountSample poisson_counts(double rate_cps, double duration_s, std::uint64_t seed) {
  if (!(rate_cps >= 0.0) || !std::isfinite(rate_cps))
    throw std::invalid_argument("poisson_counts: rate must be finite and >= 0");
  if (!(duration_s > 0.0) || !std::isfinite(duration_s))
    throw std::invalid_argument("poisson_counts: duration must be finite and > 0");
  std::uint64_t counts = 0;
  const double mean = rate_cps * duration_s;
  if (mean > 0.0) {
    std::mt19937_64 gen(seed);
    std::poisson_distribution<std::uint64_t> dist(mean);
    counts = dist(gen);
  }
  const auto c = static_cast<double>(counts);
  return {rate_cps, duration_s, counts, c / duration_s, std::sqrt(c) / duration_s};
}

double duration_for_sigma(double rate_cps, double sigma_cps) {
  if (!(rate_cps > 0.0) || !(sigma_cps > 0.0))
    throw std::invalid_argument("duration_for_sigma: rate and sigma must be positive");
  return rate_cps / (sigma_cps * sigma_cps);
}

std::vector<ReproductionRow> reproduce_paper_table(const TheoryModel& model) {
  const TheoryModel theory =
      model ? model : [](const Scenario& sc) { return run(sc).norm(Detector::OSelected); };
  const double alpha = deg_to_rad(kExperimentAlphaDeg);
  const double cps_per_norm = kReferenceCps / kReferenceIntensity;

  struct RowInput {
    const char* name;
    Scenario scenario;
    double measured;
    double measured_sigma;
  };
  const RowInput inputs[] = {
      {"I_REF", reference_scenario(), kReferenceCps, kReferenceSigmaCps},
      {"I_II_MAG", magnet_scenario(Path::II, alpha), kMeasuredMagnetIICps,
       kMeasuredMagnetSigmaCps},
      {"I_I_MAG", magnet_scenario(Path::I, alpha), kMeasuredMagnetICps, kMeasuredMagnetSigmaCps},
  };

  std::vector<ReproductionRow> rows;
  for (const RowInput& s : inputs) {
    const double norm = theory(s.scenario);
    const double cps = norm * cps_per_norm;
    const double theory_sigma = kReferenceSigmaCps * norm / kReferenceIntensity;
    const double combined = std::hypot(theory_sigma, s.measured_sigma);
    rows.push_back({s.name, norm, cps, theory_sigma, s.measured, s.measured_sigma,
                    std::abs(cps - s.measured) <= kAgreementSigmas * combined});
  }
  return rows;
}

bool all_agree(std::span<const ReproductionRow> rows) {
  for (const auto& r : rows)
    if (!r.agrees) return false;
  return !rows.empty();
}

}  // namespace cheshire

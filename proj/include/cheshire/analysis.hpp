#pragma once

// Truncation-order analysis of the B_z interaction and counting statistics.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cheshire/elements.hpp"
#include "cheshire/experiment.hpp"

namespace cheshire {

/// Errors below this are treated as numerical noise and left out of fits.
inline constexpr double kFitErrorFloor = 1e-13;

/// Least-squares slope of log(y) against log(x), skipping points with
/// y < floor. Throws std::domain_error if fewer than two points remain.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y,
                        double floor = kFitErrorFloor);

struct TruncationReport {
  Path path;
  std::vector<double> alpha;
  std::vector<double> i_exact;
  std::vector<double> i_linear;
  std::vector<double> i_quadratic;
  double linear_error_exponent;     // slope of |I_linear - I_exact|
  double quadratic_error_exponent;  // slope of |I_quadratic - I_exact|
};

/// O_selected intensity at chi = 0 for each alpha under all three
/// truncations. The grid must be positive with at least 10 points.
TruncationReport truncation_scan(Path path, std::span<const double> alpha_grid);

/// I_ref - I_O for a magnet on path II at chi = 0, per truncation.
struct CheshireWitness {
  double deficit_linear;
  double deficit_quadratic;
  double deficit_exact;
};

CheshireWitness cheshire_witness(RotationAngle alpha);

struct CountSample {
  double rate_cps;
  double duration_s;
  std::uint64_t counts;
  double est_rate;   // counts / duration
  double est_sigma;  // sqrt(counts) / duration
};

/// Poisson draw with mean rate * duration from a generator seeded with `seed`.
CountSample poisson_counts(double rate_cps, double duration_s, std::uint64_t seed);

/// Acquisition time at which Poisson counting gives standard deviation
/// `sigma_cps` on a rate `rate_cps`: t = rate / sigma^2.
double duration_for_sigma(double rate_cps, double sigma_cps);

/// One row of the theory-versus-measurement comparison at alpha = 20 deg,
/// chi = 0, I_ref = 11.25(5) cps.
struct ReproductionRow {
  std::string quantity;
  double theory_norm;
  double theory_cps;
  double theory_sigma_cps;  // propagated from the reference-rate uncertainty
  double measured_cps;
  double measured_sigma_cps;
  bool agrees;  // |theory - measured| <= 2 * hypot(theory_sigma, measured_sigma)
};

/// Maps a scenario to its normalized O_selected intensity.
using TheoryModel = std::function<double(const Scenario&)>;

/// Theory from run() unless a model is supplied.
std::vector<ReproductionRow> reproduce_paper_table(const TheoryModel& model = {});
bool all_agree(std::span<const ReproductionRow> rows);

inline constexpr double kReferenceCps = 11.25;
inline constexpr double kReferenceSigmaCps = 0.05;
inline constexpr double kMeasuredMagnetIICps = 10.93;
inline constexpr double kMeasuredMagnetICps = 11.57;
inline constexpr double kMeasuredMagnetSigmaCps = 0.06;
inline constexpr double kExperimentAlphaDeg = 20.0;
inline constexpr double kAgreementSigmas = 2.0;

}  // namespace cheshire

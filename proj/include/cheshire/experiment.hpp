#pragma once

// The interferometer pipeline: pre-selected state -> insertion -> phase
// shifter -> second beam splitter -> detectors.
//
// Intensities are computed in normalized units where the reference
// intensity at O (no insertion, chi = 0, |S_x-> selected) is 1/4. Counts
// per second are applied only when building IntensityRecord, by scaling
// with scale_ref_cps / (1/4).

#include <array>
#include <span>
#include <variant>
#include <vector>

#include "cheshire/elements.hpp"
#include "cheshire/qcore.hpp"

namespace cheshire {

inline constexpr double kReferenceIntensity = 0.25;
inline constexpr double kDefaultScaleRefCps = 11.25;

struct NoInsertion {
  friend bool operator==(const NoInsertion&, const NoInsertion&) = default;
};

struct AbsorberInsertion {
  Path path;
  Transmissivity transmissivity;
  friend bool operator==(const AbsorberInsertion&, const AbsorberInsertion&) = default;
};

struct MagnetInsertion {
  Path path;
  RotationAngle alpha;
  Truncation truncation = Truncation::Exact;
  friend bool operator==(const MagnetInsertion&, const MagnetInsertion&) = default;
};

using Insertion = std::variant<NoInsertion, AbsorberInsertion, MagnetInsertion>;

struct Scenario {
  Insertion insertion = NoInsertion{};
  double chi = 0.0;  // radians
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

Scenario reference_scenario(double chi = 0.0);
Scenario absorber_scenario(Path path, double transmissivity, double chi = 0.0);
Scenario magnet_scenario(Path path, double alpha_rad, Truncation trunc = Truncation::Exact,
                         double chi = 0.0);

/// The operator realizing a scenario's insertion (identity for NoInsertion).
JointOperator insertion_operator(const Insertion& ins);

enum class Detector { OSelected = 0, OUnselected = 1, H = 2 };
inline constexpr std::array<Detector, 3> kAllDetectors = {Detector::OSelected,
                                                          Detector::OUnselected, Detector::H};
const char* to_string(Detector d) noexcept;

struct IntensityRecord {
  Scenario scenario;
  Detector detector;
  double intensity_norm;
  double intensity_cps;
  double scale_ref_cps;
};

struct RunResult {
  Scenario scenario;
  std::array<IntensityRecord, 3> records;  // indexed by Detector

  const IntensityRecord& at(Detector d) const { return records[static_cast<std::size_t>(d)]; }
  double norm(Detector d) const { return at(d).intensity_norm; }
};

/// (|S_x+>|I> + |S_x->|II>)/sqrt(2)
JointState initial_state();
/// (|S_x->|I> + |S_x->|II>)/sqrt(2)
JointState postselection_state();

/// State just before the second beam splitter.
JointState evolve(const Scenario& sc);

RunResult run(const Scenario& sc, double scale_ref_cps = kDefaultScaleRefCps);

/// Quoted closed forms for the O_selected intensity with an exact magnet:
/// path II: 1/4 cos^2(alpha/2) (any chi); path I: 1/4 (3 - cos alpha)/2
/// (chi = 0 only). Throws std::invalid_argument for any other scenario.
double closed_form_O(const Scenario& sc);

/// One run() per grid point with the template's chi replaced.
std::vector<RunResult> sweep_chi(const Scenario& tmpl, std::span<const double> chi_grid,
                                 double scale_ref_cps = kDefaultScaleRefCps);
/// One run() per grid point with the template magnet's alpha replaced.
/// The template must carry a MagnetInsertion.
std::vector<RunResult> sweep_alpha(const Scenario& tmpl, std::span<const double> alpha_grid,
                                   double scale_ref_cps = kDefaultScaleRefCps);

std::vector<double> linspace(double start, double end, std::size_t points);
std::vector<double> logspace(double start, double end, std::size_t points);

}  // namespace cheshire

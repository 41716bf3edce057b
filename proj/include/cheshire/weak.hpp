#pragma once

// Weak values <A>_w = <psi_f|A|psi_i> / <psi_f|psi_i> for the interferometer's
// path and path-resolved spin observables, the second-order intensity
// expansion they feed, and estimators that invert measured intensities.

#include <stdexcept>

#include "cheshire/elements.hpp"
#include "cheshire/experiment.hpp"
#include "cheshire/qcore.hpp"

namespace cheshire {

/// Thrown when |<psi_f|psi_i>| is below kDegenerateOverlap.
class DegeneratePostselection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an estimator's inputs cannot come from any weak-value set.
class InconsistentIntensities : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDegenerateOverlap = 1e-12;

struct WeakValueSet {
  Complex pi_I;
  Complex pi_II;
  Complex sigma_pi_I;
  Complex sigma_pi_II;

  Complex pi(Path p) const { return p == Path::I ? pi_I : pi_II; }
  Complex sigma_pi(Path p) const { return p == Path::I ? sigma_pi_I : sigma_pi_II; }
};

/// Path projector 1 (x) Pi_j on the joint space.
JointOperator path_projector(Path p);
/// sigma_z restricted to one path: sigma_z (x) Pi_j.
JointOperator sigma_z_on_path(Path p);

Complex weak_value(const JointOperator& a, const JointState& psi_i, const JointState& psi_f);

/// All four weak values for the given pre/post-selection.
WeakValueSet weak_values(const JointState& psi_i, const JointState& psi_f);
/// Same, for the interferometer's own initial_state()/postselection_state().
WeakValueSet weak_values();

/// I_ref [1 - alpha^2/4 Re<Pi_j>_w + alpha^2/4 |<sigma_z Pi_j>_w|^2]
double weakvalue_intensity(RotationAngle alpha, Path path, const WeakValueSet& wv,
                           double i_ref_norm);

/// <s|sigma_z|s> / <s|s> for the spin state carried on `path` by the
/// pre-selected state.
double projective_spin_expectation(Path path);
/// Same, for the state on `path` after the scenario's insertion and phase
/// shift. Throws std::domain_error if the path carries no amplitude.
double projective_spin_expectation(Path path, const Scenario& sc);

enum class EstimateSource { AbsorberInversion, MagnetInversion };
const char* to_string(EstimateSource s) noexcept;

struct WeakValueEstimate {
  double value;
  double uncertainty;  // one standard deviation, first-order propagation
  EstimateSource source;
};

/// |<sigma_z Pi_j>_w| from a magnet intensity by inverting the second-order
/// expansion:
///   |w|^2 = (4/alpha^2)(I_mag/I_ref - 1) + pi_w.
/// A squared estimate in [-tolerance, 0) is clamped to zero; anything lower
/// throws InconsistentIntensities. sigma_* are intensity standard deviations.
/// At a zero estimate the uncertainty reported is sqrt(sigma of |w|^2).
WeakValueEstimate estimate_sigma_pi(double i_mag_norm, double i_ref_norm, RotationAngle alpha,
                                    double pi_w, double sigma_mag = 0.0, double sigma_ref = 0.0,
                                    double tolerance = 1e-9);

/// <Pi_j>_w to first order in (1 - sqrt T) from an absorber intensity:
///   (1 - I_abs/I_ref) / (2 (1 - sqrt T)).
/// Requires T < 1.
WeakValueEstimate estimate_pi_from_absorber(double i_abs_norm, double i_ref_norm,
                                            Transmissivity t, double sigma_abs = 0.0,
                                            double sigma_ref = 0.0);

/// Diagnostic: |<sigma_z Pi_j>_w|^2 recovered from the all-orders intensity
///   I/I_ref = (1 + (cos(alpha/2) - 1) pi_w)^2 + sin^2(alpha/2) |w|^2,
/// valid for a real pi_w. Not clamped.
double sigma_pi_squared_all_orders(double i_mag_norm, double i_ref_norm, RotationAngle alpha,
                                   double pi_w);

}  // namespace cheshire

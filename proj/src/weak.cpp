#include "cheshire/weak.hpp"

#include <cmath>
#include <string>

namespace cheshire {

namespace {

void require_positive_ref(double i_ref) {
  if (!(i_ref > 0.0) || !std::isfinite(i_ref))
    throw std::invalid_argument("reference intensity must be positive and finite");
}

void require_sigma(double s) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("intensity uncertainty must be finite and nonnegative");
}

double spin_z_expectation(const SpinVector& s) {
  const double n = norm2(s);
  if (n == 0.0) throw std::domain_error("no amplitude on the requested path");
  return (std::norm(s[0]) - std::norm(s[1])) / n;
}

}  // namespace

JointOperator path_projector(Path p) { return tensor(identity2(), path_projector2(p)); }

JointOperator sigma_z_on_path(Path p) { return tensor(pauli_z(), path_projector2(p)); }

Complex weak_value(const JointOperator& a, const JointState& psi_i, const JointState& psi_f) {
  const Complex overlap = inner(psi_f, psi_i);
  if (std::abs(overlap) < kDegenerateOverlap)
    throw DegeneratePostselection("post-selected state is orthogonal to the pre-selected state");
  return inner(psi_f, apply(a, psi_i)) / overlap;
}

WeakValueSet weak_values(const JointState& psi_i, const JointState& psi_f) {
  return {weak_value(path_projector(Path::I), psi_i, psi_f),
          weak_value(path_projector(Path::II), psi_i, psi_f),
          weak_value(sigma_z_on_path(Path::I), psi_i, psi_f),
          weak_value(sigma_z_on_path(Path::II), psi_i, psi_f)};
}

WeakValueSet weak_values() { return weak_values(initial_state(), postselection_state()); }

double weakvalue_intensity(RotationAngle alpha, Path path, const WeakValueSet& wv,
                           double i_ref_norm) {
  const double q = alpha.radians() * alpha.radians() / 4.0;
  return i_ref_norm * (1.0 - q * wv.pi(path).real() + q * std::norm(wv.sigma_pi(path)));
}

double projective_spin_expectation(Path path) {
  return spin_z_expectation(initial_state().on_path(path));
}

double projective_spin_expectation(Path path, const Scenario& sc) {
  return spin_z_expectation(evolve(sc).on_path(path));
}

const char* to_string(EstimateSource s) noexcept {
  return s == EstimateSource::AbsorberInversion ? "absorber-inversion" : "magnet-inversion";
}

WeakValueEstimate estimate_sigma_pi(double i_mag_norm, double i_ref_norm, RotationAngle alpha,
                                    double pi_w, double sigma_mag, double sigma_ref,
                                    double tolerance) {
  require_positive_ref(i_ref_norm);
  require_sigma(sigma_mag);
  require_sigma(sigma_ref);
  const double a = alpha.radians();
  if (a == 0.0) throw std::invalid_argument("estimate_sigma_pi: alpha must be nonzero");

  const double gain = 4.0 / (a * a);
  double squared = gain * (i_mag_norm / i_ref_norm - 1.0) + pi_w;
  const double sigma_squared =
      gain * std::hypot(sigma_mag / i_ref_norm, i_mag_norm * sigma_ref / (i_ref_norm * i_ref_norm));

  if (squared < -tolerance)
    throw InconsistentIntensities("squared weak-value estimate is negative: " +
                                  std::to_string(squared));
  if (squared < 0.0) squared = 0.0;

  const double value = std::sqrt(squared);
  const double uncertainty = value > 0.0 ? sigma_squared / (2.0 * value) : std::sqrt(sigma_squared);
  return {value, uncertainty, EstimateSource::MagnetInversion};
}

WeakValueEstimate estimate_pi_from_absorber(double i_abs_norm, double i_ref_norm,
                                            Transmissivity t, double sigma_abs,
                                            double sigma_ref) {
  require_positive_ref(i_ref_norm);
  require_sigma(sigma_abs);
  require_sigma(sigma_ref);
  if (t.value() >= 1.0)
    throw std::invalid_argument("estimate_pi_from_absorber: T = 1 carries no signal");
  const double denom = 2.0 * (1.0 - t.amplitude());
  const double value = (1.0 - i_abs_norm / i_ref_norm) / denom;
  const double uncertainty =
      std::hypot(sigma_abs / i_ref_norm, i_abs_norm * sigma_ref / (i_ref_norm * i_ref_norm)) /
      denom;
  return {value, uncertainty, EstimateSource::AbsorberInversion};
}

double sigma_pi_squared_all_orders(double i_mag_norm, double i_ref_norm, RotationAngle alpha,
                                   double pi_w) {
  require_positive_ref(i_ref_norm);
  const double half = alpha.radians() / 2.0;
  const double s = std::sin(half);
  if (s == 0.0) throw std::invalid_argument("alpha must not be a multiple of 2 pi");
  const double even = 1.0 + (std::cos(half) - 1.0) * pi_w;
  return (i_mag_norm / i_ref_norm - even * even) / (s * s);
}

}  // namespace cheshire

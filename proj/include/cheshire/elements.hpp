#pragma once

// Beamline elements of the interferometer as operators on the joint space.

#include <cmath>

#include "cheshire/qcore.hpp"

namespace cheshire {

/// How exp(i sigma_z alpha/2) is represented:
///   Exact     : cos(alpha/2) 1 + i sin(alpha/2) sigma_z
///   Linear    : 1 + i sigma_z alpha/2
///   Quadratic : (1 - alpha^2/8) 1 + i sigma_z alpha/2
/// The truncated forms are not unitary and are applied as-is.
enum class Truncation { Exact, Linear, Quadratic };

const char* to_string(Truncation t) noexcept;

/// Intensity transmission fraction of an absorber, 0 <= T <= 1.
class Transmissivity {
 public:
  explicit Transmissivity(double t);
  double value() const noexcept { return t_; }
  /// Amplitude factor sqrt(T).
  double amplitude() const noexcept { return std::sqrt(t_); }
  friend bool operator==(const Transmissivity&, const Transmissivity&) = default;

 private:
  double t_;
};

/// Spin rotation angle produced by the B_z field, in radians.
class RotationAngle {
 public:
  explicit RotationAngle(double radians);
  static RotationAngle from_degrees(double degrees);
  double radians() const noexcept { return rad_; }
  double degrees() const noexcept;
  friend bool operator==(const RotationAngle&, const RotationAngle&) = default;

 private:
  double rad_;
};

double deg_to_rad(double deg) noexcept;
double rad_to_deg(double rad) noexcept;

/// Path I amplitudes pick up exp(-i chi/2), path II amplitudes exp(+i chi/2).
JointOperator phase_shifter(double chi);

/// Multiplies the amplitudes on `path` by sqrt(T).
JointOperator absorber(Path path, Transmissivity t);

/// Spin rotation about z on `path`, identity on the other arm.
JointOperator magnetic_rotation(Path path, RotationAngle alpha, Truncation trunc);

/// Output ports of the second beam splitter, one spin amplitude each.
struct PortAmplitudes {
  SpinVector o;
  SpinVector h;
};

/// Symmetric 50/50 splitter: O = (I + II)/sqrt(2), H = (I - II)/sqrt(2),
/// componentwise in spin.
PortAmplitudes recombine(const JointState& s);

/// <S_x-|amp>, the amplitude passed by the spin selector in front of O.
Complex spin_select_minus(const SpinVector& amp);

}  // namespace cheshire

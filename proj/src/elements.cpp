#include "cheshire/elements.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace cheshire {

const char* to_string(Truncation t) noexcept {
  switch (t) {
    case Truncation::Exact:
      return "exact";
    case Truncation::Linear:
      return "linear";
    case Truncation::Quadratic:
      return "quadratic";
  }
  return "?";
}

Transmissivity::Transmissivity(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("transmissivity must lie in [0, 1], got " + std::to_string(t));
  }
}

RotationAngle::RotationAngle(double radians) : rad_(radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("rotation angle must be finite");
}

RotationAngle RotationAngle::from_degrees(double degrees) { return RotationAngle(deg_to_rad(degrees)); }

double RotationAngle::degrees() const noexcept { return rad_to_deg(rad_); }

double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

JointOperator phase_shifter(double chi) {
  if (!std::isfinite(chi)) throw std::invalid_argument("phase chi must be finite");
  const Complex lower = std::polar(1.0, -chi / 2.0);
  const Complex upper = std::polar(1.0, chi / 2.0);
  return JointOperator::diagonal({lower, lower, upper, upper});
}

JointOperator absorber(Path path, Transmissivity t) {
  const Matrix2 attenuate = path == Path::I ? Matrix2{{{t.amplitude(), 0.0}, {0.0, 1.0}}}
                                            : Matrix2{{{1.0, 0.0}, {0.0, t.amplitude()}}};
  return tensor(identity2(), attenuate);
}

JointOperator magnetic_rotation(Path path, RotationAngle alpha, Truncation trunc) {
  const double a = alpha.radians();
  double even = 1.0;  // coefficient of the identity
  double odd = 0.0;   // coefficient of i sigma_z
  switch (trunc) {
    case Truncation::Exact:
      even = std::cos(a / 2.0);
      odd = std::sin(a / 2.0);
      break;
    case Truncation::Linear:
      odd = a / 2.0;
      break;
    case Truncation::Quadratic:
      even = 1.0 - a * a / 8.0;
      odd = a / 2.0;
      break;
  }
  const Matrix2 local = {{{Complex(even, odd), 0.0}, {0.0, Complex(even, -odd)}}};
  const Path other = path == Path::I ? Path::II : Path::I;
  return tensor(local, path_projector2(path)) + tensor(identity2(), path_projector2(other));
}

PortAmplitudes recombine(const JointState& s) {
  const double r = 1.0 / std::sqrt(2.0);
  const SpinVector lower = s.on_path(Path::I);
  const SpinVector upper = s.on_path(Path::II);
  PortAmplitudes out;
  for (std::size_t k = 0; k < 2; ++k) {
    out.o[k] = r * (lower[k] + upper[k]);
    out.h[k] = r * (lower[k] - upper[k]);
  }
  return out;
}

Complex spin_select_minus(const SpinVector& amp) { return dot(sx_minus(), amp); }

}  // namespace cheshire

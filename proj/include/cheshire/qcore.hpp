#pragma once

// Dense complex linear algebra on the spin (z basis) x path Hilbert space.
//
// Basis order, used everywhere in the library:
//   index 0: (ZUp,   I)
//   index 1: (ZDown, I)
//   index 2: (ZUp,   II)
//   index 3: (ZDown, II)
// i.e. index = 2 * path + spin. Path I is the lower arm, path II the upper.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace cheshire {

using Complex = std::complex<double>;

enum class Spin : std::uint8_t { ZUp = 0, ZDown = 1 };
enum class Path : std::uint8_t { I = 0, II = 1 };

inline constexpr std::size_t kDim = 4;

constexpr std::size_t basis_index(Spin s, Path p) noexcept {
  return 2 * static_cast<std::size_t>(p) + static_cast<std::size_t>(s);
}

const char* to_string(Path p) noexcept;

/// Two-component spin amplitude in the z basis.
using SpinVector = std::array<Complex, 2>;

/// 2x2 complex matrix, row major. Used both for spin operators and for
/// operators acting on the two path labels.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// |S_x+> = (|z+> + |z->)/sqrt(2)
SpinVector sx_plus() noexcept;
/// |S_x-> = (|z+> - |z->)/sqrt(2)
SpinVector sx_minus() noexcept;

Matrix2 identity2() noexcept;
Matrix2 pauli_z() noexcept;
/// diag(1,0) for path I, diag(0,1) for path II.
Matrix2 path_projector2(Path p) noexcept;

Complex dot(const SpinVector& a, const SpinVector& b) noexcept;  // <a|b>
double norm2(const SpinVector& v) noexcept;

class JointState {
 public:
  JointState() = default;  // zero vector
  JointState(std::initializer_list<Complex> amps);
  explicit JointState(const std::array<Complex, kDim>& amps);

  /// |spin>|path>
  static JointState product(const SpinVector& spin, Path path);
  static JointState basis(std::size_t k);

  const Complex& operator[](std::size_t k) const { return amp_[k]; }
  Complex amplitude(Spin s, Path p) const { return amp_[basis_index(s, p)]; }
  /// Spin amplitude carried on one path (unnormalized).
  SpinVector on_path(Path p) const noexcept;
  const std::array<Complex, kDim>& data() const noexcept { return amp_; }

  JointState operator+(const JointState& o) const;
  JointState operator-(const JointState& o) const;
  JointState operator*(Complex c) const;

 private:
  std::array<Complex, kDim> amp_{};
};

class JointOperator {
 public:
  JointOperator() = default;  // zero matrix
  explicit JointOperator(const std::array<Complex, kDim * kDim>& row_major);

  static JointOperator identity();
  static JointOperator diagonal(const std::array<Complex, kDim>& d);

  const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r * kDim + c]; }

  JointOperator operator+(const JointOperator& o) const;
  JointOperator operator-(const JointOperator& o) const;
  JointOperator operator*(Complex c) const;

 private:
  std::array<Complex, kDim * kDim> m_{};
};

/// Kronecker product placing spin_op on the spin factor and path_op on the
/// path factor, in the basis order documented above.
JointOperator tensor(const Matrix2& spin_op, const Matrix2& path_op);

JointState apply(const JointOperator& op, const JointState& s);
/// <a|b>, conjugate-linear in a.
Complex inner(const JointState& a, const JointState& b);
double norm2(const JointState& s);
JointOperator dagger(const JointOperator& op);
/// a * b (b acts first).
JointOperator compose(const JointOperator& a, const JointOperator& b);

double max_abs_entry(const JointOperator& op);
double max_abs_diff(const JointOperator& a, const JointOperator& b);
double max_abs_diff(const JointState& a, const JointState& b);

/// max |(op op^dagger - 1)_ij| <= tol
bool is_unitary(const JointOperator& op, double tol);
bool is_hermitian(const JointOperator& op, double tol);

}  // namespace cheshire

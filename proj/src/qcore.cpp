#include "cheshire/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cheshire {

namespace {

void require_finite(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("non-finite complex amplitude");
  }
}

}  // namespace

const char* to_string(Path p) noexcept { return p == Path::I ? "I" : "II"; }

SpinVector sx_plus() noexcept {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r}, Complex{r}};
}

SpinVector sx_minus() noexcept {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r}, Complex{-r}};
}

Matrix2 identity2() noexcept { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

Matrix2 pauli_z() noexcept { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

Matrix2 path_projector2(Path p) noexcept {
  return p == Path::I ? Matrix2{{{1.0, 0.0}, {0.0, 0.0}}} : Matrix2{{{0.0, 0.0}, {0.0, 1.0}}};
}

Complex dot(const SpinVector& a, const SpinVector& b) noexcept {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double norm2(const SpinVector& v) noexcept { return std::norm(v[0]) + std::norm(v[1]); }

// ---------------------------------------------------------------------------
// JointState

JointState::JointState(std::initializer_list<Complex> amps) {
  if (amps.size() != kDim) throw std::invalid_argument("JointState needs exactly 4 amplitudes");
  std::copy(amps.begin(), amps.end(), amp_.begin());
  for (const auto& z : amp_) require_finite(z);
}

JointState::JointState(const std::array<Complex, kDim>& amps) : amp_(amps) {
  for (const auto& z : amp_) require_finite(z);
}

JointState JointState::product(const SpinVector& spin, Path path) {
  std::array<Complex, kDim> a{};
  a[basis_index(Spin::ZUp, path)] = spin[0];
  a[basis_index(Spin::ZDown, path)] = spin[1];
  return JointState(a);
}

JointState JointState::basis(std::size_t k) {
  if (k >= kDim) throw std::out_of_range("basis index");
  std::array<Complex, kDim> a{};
  a[k] = 1.0;
  return JointState(a);
}

SpinVector JointState::on_path(Path p) const noexcept {
  return {amp_[basis_index(Spin::ZUp, p)], amp_[basis_index(Spin::ZDown, p)]};
}

JointState JointState::operator+(const JointState& o) const {
  std::array<Complex, kDim> a{};
  for (std::size_t k = 0; k < kDim; ++k) a[k] = amp_[k] + o.amp_[k];
  return JointState(a);
}

JointState JointState::operator-(const JointState& o) const { return *this + o * Complex{-1.0}; }

JointState JointState::operator*(Complex c) const {
  std::array<Complex, kDim> a{};
  for (std::size_t k = 0; k < kDim; ++k) a[k] = amp_[k] * c;
  return JointState(a);
}

// ---------------------------------------------------------------------------
// JointOperator

JointOperator::JointOperator(const std::array<Complex, kDim * kDim>& row_major) : m_(row_major) {
  for (const auto& z : m_) require_finite(z);
}

JointOperator JointOperator::identity() {
  return diagonal({Complex{1.0}, Complex{1.0}, Complex{1.0}, Complex{1.0}});
}

JointOperator JointOperator::diagonal(const std::array<Complex, kDim>& d) {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t k = 0; k < kDim; ++k) m[k * kDim + k] = d[k];
  return JointOperator(m);
}

JointOperator JointOperator::operator+(const JointOperator& o) const {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = m_[k] + o.m_[k];
  return JointOperator(m);
}

JointOperator JointOperator::operator-(const JointOperator& o) const {
  return *this + o * Complex{-1.0};
}

JointOperator JointOperator::operator*(Complex c) const {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = m_[k] * c;
  return JointOperator(m);
}

// ---------------------------------------------------------------------------

JointOperator tensor(const Matrix2& spin_op, const Matrix2& path_op) {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t pr = 0; pr < 2; ++pr)
    for (std::size_t pc = 0; pc < 2; ++pc)
      for (std::size_t sr = 0; sr < 2; ++sr)
        for (std::size_t sc = 0; sc < 2; ++sc)
          m[(2 * pr + sr) * kDim + (2 * pc + sc)] = path_op[pr][pc] * spin_op[sr][sc];
  return JointOperator(m);
}

JointState apply(const JointOperator& op, const JointState& s) {
  std::array<Complex, kDim> out{};
  for (std::size_t r = 0; r < kDim; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < kDim; ++c) acc += op(r, c) * s[c];
    out[r] = acc;
  }
  return JointState(out);
}

Complex inner(const JointState& a, const JointState& b) {
  Complex acc{};
  for (std::size_t k = 0; k < kDim; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double norm2(const JointState& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < kDim; ++k) acc += std::norm(s[k]);
  return acc;
}

JointOperator dagger(const JointOperator& op) {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) m[r * kDim + c] = std::conj(op(c, r));
  return JointOperator(m);
}

JointOperator compose(const JointOperator& a, const JointOperator& b) {
  std::array<Complex, kDim * kDim> m{};
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < kDim; ++k) acc += a(r, k) * b(k, c);
      m[r * kDim + c] = acc;
    }
  return JointOperator(m);
}

double max_abs_entry(const JointOperator& op) {
  double mx = 0.0;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) mx = std::max(mx, std::abs(op(r, c)));
  return mx;
}

double max_abs_diff(const JointOperator& a, const JointOperator& b) { return max_abs_entry(a - b); }

double max_abs_diff(const JointState& a, const JointState& b) {
  double mx = 0.0;
  for (std::size_t k = 0; k < kDim; ++k) mx = std::max(mx, std::abs(a[k] - b[k]));
  return mx;
}

bool is_unitary(const JointOperator& op, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tol must be positive");
  return max_abs_diff(compose(op, dagger(op)), JointOperator::identity()) <= tol;
}

bool is_hermitian(const JointOperator& op, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_hermitian: tol must be positive");
  return max_abs_diff(op, dagger(op)) <= tol;
}

}  // namespace cheshire

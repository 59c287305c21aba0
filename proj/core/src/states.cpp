#include "qsdc/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const cx& a : amp) s += std::norm(a);
  return s;
}

StateVector StateVector::normalized() const {
  const double n = std::sqrt(squared_norm());
  StateVector r = *this;
  for (cx& a : r.amp) a /= n;
  return r;
}

cx inner(const StateVector& a, const StateVector& b) {
  cx s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a.amp[static_cast<std::size_t>(i)]) * b.amp[static_cast<std::size_t>(i)];
  return s;
}

void DensityMatrix::validate() const {
  if (!is_hermitian(mat, 1e-12)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(trace_real() - 1.0) > 1e-12 || std::abs(std::imag(trace(mat))) > 1e-12)
    throw std::invalid_argument("density matrix trace is not 1");
  const EigenSystem eig = eig_hermitian(mat, 1e-10);
  for (int i = 0; i < eig.dim; ++i)
    if (eig.values[static_cast<std::size_t>(i)] < -1e-10)
      throw std::invalid_argument("density matrix has a negative eigenvalue");
}

Mat2 encoding_matrix(EncodingOp op) {
  Mat2 u;
  switch (op) {
    case EncodingOp::U00:
      u(0, 0) = 1.0;
      u(1, 1) = 1.0;
      break;
    case EncodingOp::U01:
      u(0, 0) = 1.0;
      u(1, 1) = -1.0;
      break;
    case EncodingOp::U10:
      u(0, 1) = 1.0;
      u(1, 0) = 1.0;
      break;
    case EncodingOp::U11:
      u(0, 1) = 1.0;
      u(1, 0) = -1.0;
      break;
  }
  return u;
}

Code encoding_code(EncodingOp op) { return static_cast<Code>(op); }

EncodingOp encoding_from_code(Code code) {
  if (code > 3) throw std::invalid_argument("code out of range");
  return static_cast<EncodingOp>(code);
}

BellKind bell_for_code(Code code) {
  switch (code & 3) {
    case 0b00: return BellKind::PsiMinus;
    case 0b01: return BellKind::PsiPlus;
    case 0b10: return BellKind::PhiMinus;
    default: return BellKind::PhiPlus;
  }
}

Code code_for_bell(BellKind kind) {
  switch (kind) {
    case BellKind::PsiMinus: return 0b00;
    case BellKind::PsiPlus: return 0b01;
    case BellKind::PhiMinus: return 0b10;
    case BellKind::PhiPlus: return 0b11;
  }
  return 0;
}

StateVector bell_state(BellKind kind) {
  StateVector s;
  switch (kind) {
    case BellKind::PhiPlus:
      s.amp = {cx(kInvSqrt2), 0.0, 0.0, cx(kInvSqrt2)};
      break;
    case BellKind::PhiMinus:
      s.amp = {cx(kInvSqrt2), 0.0, 0.0, cx(-kInvSqrt2)};
      break;
    case BellKind::PsiPlus:
      s.amp = {0.0, cx(kInvSqrt2), cx(kInvSqrt2), 0.0};
      break;
    case BellKind::PsiMinus:
      s.amp = {0.0, cx(kInvSqrt2), cx(-kInvSqrt2), 0.0};
      break;
  }
  return s;
}

std::array<cx, 2> basis_ket(MeasBasis basis, int element) {
  if (basis == MeasBasis::Bz) {
    return element == 0 ? std::array<cx, 2>{1.0, 0.0} : std::array<cx, 2>{0.0, 1.0};
  }
  return element == 0 ? std::array<cx, 2>{cx(kInvSqrt2), cx(kInvSqrt2)}
                      : std::array<cx, 2>{cx(kInvSqrt2), cx(-kInvSqrt2)};
}

StateVector apply_to_qubit(const Mat2& u, Qubit which, const StateVector& state) {
  StateVector r;
  if (which == Qubit::A) {
    // index 2a + b
    for (int b = 0; b < 2; ++b) {
      r.amp[static_cast<std::size_t>(b)] =
          u(0, 0) * state.amp[static_cast<std::size_t>(b)] + u(0, 1) * state.amp[static_cast<std::size_t>(2 + b)];
      r.amp[static_cast<std::size_t>(2 + b)] =
          u(1, 0) * state.amp[static_cast<std::size_t>(b)] + u(1, 1) * state.amp[static_cast<std::size_t>(2 + b)];
    }
  } else {
    for (int a = 0; a < 2; ++a) {
      r.amp[static_cast<std::size_t>(2 * a)] =
          u(0, 0) * state.amp[static_cast<std::size_t>(2 * a)] + u(0, 1) * state.amp[static_cast<std::size_t>(2 * a + 1)];
      r.amp[static_cast<std::size_t>(2 * a + 1)] =
          u(1, 0) * state.amp[static_cast<std::size_t>(2 * a)] + u(1, 1) * state.amp[static_cast<std::size_t>(2 * a + 1)];
    }
  }
  return r;
}

DensityMatrix apply_to_qubit(const Mat2& u, Qubit which, const DensityMatrix& rho) {
  const Mat4 big = which == Qubit::A ? kron(u, Mat2::identity()) : kron(Mat2::identity(), u);
  return DensityMatrix{big * rho.mat * adjoint(big)};
}

DensityMatrix density_from_pure(const StateVector& state) {
  DensityMatrix d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      d.mat(i, j) = state.amp[static_cast<std::size_t>(i)] * std::conj(state.amp[static_cast<std::size_t>(j)]);
  return d;
}

ReducedDensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep) {
  Mat2 r;
  if (keep == Qubit::A) {
    for (int a = 0; a < 2; ++a)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b = 0; b < 2; ++b) r(a, a2) += rho.mat(2 * a + b, 2 * a2 + b);
  } else {
    for (int b = 0; b < 2; ++b)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a = 0; a < 2; ++a) r(b, b2) += rho.mat(2 * a + b, 2 * a + b2);
  }
  return r;
}

DensityMatrix depolarize(const DensityMatrix& rho, Qubit which, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarize: p outside [0,1]");
  const Mat2 half = 0.5 * Mat2::identity();
  Mat4 mixed;
  if (which == Qubit::B) {
    mixed = kron(partial_trace(rho, Qubit::A), half);
  } else {
    mixed = kron(half, partial_trace(rho, Qubit::B));
  }
  return DensityMatrix{(1.0 - p) * rho.mat + p * mixed};
}

DensityMatrix TwoQubitState::density() const {
  if (is_pure()) return density_from_pure(pure());
  return std::get<DensityMatrix>(rep_);
}

void TwoQubitState::apply(const Mat2& u, Qubit which) {
  if (is_pure()) {
    rep_ = apply_to_qubit(u, which, pure());
  } else {
    rep_ = apply_to_qubit(u, which, std::get<DensityMatrix>(rep_));
  }
}

void TwoQubitState::depolarize_qubit(Qubit which, double p) {
  if (p <= 0.0) return;
  rep_ = depolarize(density(), which, p);
}

ReducedDensityMatrix TwoQubitState::marginal(Qubit keep) const { return partial_trace(density(), keep); }

}  // namespace qsdc

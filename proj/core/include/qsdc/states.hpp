#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "qsdc/linalg.hpp"

namespace qsdc {

/// Tolerance for exact algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for iterative / eigenvalue-based results.
inline constexpr double kNumericTol = 1e-9;
/// Probabilities below this are treated as exactly zero and never sampled.
inline constexpr double kProbFloor = 1e-14;

/// Qubit A is the sender's retained qubit (the encoded one); qubit B is the
/// qubit transmitted first. Basis order |00>,|01>,|10>,|11> puts A in the
/// first tensor factor.
enum class Qubit : std::uint8_t { A, B };

enum class BellKind : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Dense-coding operations and their two-bit codes.
enum class EncodingOp : std::uint8_t { U00, U01, U10, U11 };

enum class MeasBasis : std::uint8_t { Bz, Bx };

struct MeasOutcome {
  std::uint8_t bit = 0;  // 0 = first basis element, 1 = second
  friend bool operator==(MeasOutcome, MeasOutcome) = default;
};

/// Two classical bits, values 0b00..0b11.
using Code = std::uint8_t;

inline constexpr std::array<BellKind, 4> kAllBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};
inline constexpr std::array<EncodingOp, 4> kAllEncodings = {
    EncodingOp::U00, EncodingOp::U01, EncodingOp::U10, EncodingOp::U11};

/// Pure two-qubit state, amplitudes in the computational basis.
struct StateVector {
  std::array<cx, 4> amp{};

  double squared_norm() const;
  StateVector normalized() const;
};

cx inner(const StateVector& a, const StateVector& b);

/// 4x4 density operator. Hermitian, unit trace, positive semidefinite
/// (validated on demand, not on construction).
struct DensityMatrix {
  Mat4 mat;

  double trace_real() const { return std::real(trace(mat)); }
  /// Throws std::invalid_argument if Hermiticity (1e-12), unit trace (1e-12)
  /// or positivity (eigenvalues >= -1e-10) fail.
  void validate() const;
};

/// Single-qubit reduced state; shares the density-matrix invariants at 2x2.
using ReducedDensityMatrix = Mat2;

Mat2 encoding_matrix(EncodingOp op);
Code encoding_code(EncodingOp op);
EncodingOp encoding_from_code(Code code);

/// Bell state produced by applying the encoding with this code to the
/// sender's half of a singlet: 00->PsiMinus, 01->PsiPlus, 10->PhiMinus,
/// 11->PhiPlus.
BellKind bell_for_code(Code code);
Code code_for_bell(BellKind kind);

StateVector bell_state(BellKind kind);

/// Basis ket for one qubit: Bz{|0>,|1>} or Bx{|+>,|->}.
std::array<cx, 2> basis_ket(MeasBasis basis, int element);

/// (U (x) I) or (I (x) U) applied to a pure state; norm preserved.
StateVector apply_to_qubit(const Mat2& u, Qubit which, const StateVector& state);
DensityMatrix apply_to_qubit(const Mat2& u, Qubit which, const DensityMatrix& rho);

DensityMatrix density_from_pure(const StateVector& state);

ReducedDensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);

/// One-sided depolarizing channel: with probability p the chosen qubit is
/// replaced by the maximally mixed state, leaving the other marginal intact.
DensityMatrix depolarize(const DensityMatrix& rho, Qubit which, double p);

/// Joint state of one qubit pair; stays a pure vector until an operation
/// forces a mixture.
class TwoQubitState {
 public:
  TwoQubitState() : rep_(StateVector{{cx(1), 0, 0, 0}}) {}
  static TwoQubitState from_pure(const StateVector& s) { return TwoQubitState(s); }
  static TwoQubitState from_density(const DensityMatrix& d) { return TwoQubitState(d); }

  bool is_pure() const { return std::holds_alternative<StateVector>(rep_); }
  const StateVector& pure() const { return std::get<StateVector>(rep_); }
  DensityMatrix density() const;

  void apply(const Mat2& u, Qubit which);
  void depolarize_qubit(Qubit which, double p);
  ReducedDensityMatrix marginal(Qubit keep) const;

 private:
  explicit TwoQubitState(const StateVector& s) : rep_(s) {}
  explicit TwoQubitState(const DensityMatrix& d) : rep_(d) {}

  std::variant<StateVector, DensityMatrix> rep_;
};

}  // namespace qsdc

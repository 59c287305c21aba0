#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qsdc {

using cx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cx, 4> m{};

  cx& operator()(int r, int c) { return m[2 * r + c]; }
  const cx& operator()(int r, int c) const { return m[2 * r + c]; }

  static Mat2 identity();
  static Mat2 zero();
};

/// Dense 4x4 complex matrix, row-major.
struct Mat4 {
  std::array<cx, 16> m{};

  cx& operator()(int r, int c) { return m[4 * r + c]; }
  const cx& operator()(int r, int c) const { return m[4 * r + c]; }

  static Mat4 identity();
  static Mat4 zero();
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat2 operator*(cx s, const Mat2& a);
Mat4 operator*(cx s, const Mat4& a);
inline Mat2 operator*(double s, const Mat2& a) { return cx(s) * a; }
inline Mat4 operator*(double s, const Mat4& a) { return cx(s) * a; }

Mat2 adjoint(const Mat2& a);
Mat4 adjoint(const Mat4& a);
cx trace(const Mat2& a);
cx trace(const Mat4& a);

/// Kronecker product; `a` acts on the first tensor factor.
Mat4 kron(const Mat2& a, const Mat2& b);

/// Exchanges the two tensor factors of a 4x4 operator.
Mat4 swap_qubits(const Mat4& a);

double frobenius_norm(const Mat2& a);
double frobenius_norm(const Mat4& a);
double offdiag_frobenius(const Mat4& a);

bool is_hermitian(const Mat2& a, double tol);
bool is_hermitian(const Mat4& a, double tol);

/// Eigendecomposition of a Hermitian 2x2 or 4x4 matrix.
struct EigenSystem {
  int dim = 0;
  std::array<double, 4> values{};  // descending; entries [0, dim) valid
  std::array<cx, 16> vectors{};    // row-major dim x dim; column j pairs with values[j]

  cx vector(int row, int col) const { return vectors[static_cast<std::size_t>(row * dim + col)]; }
};

/// Cyclic complex Jacobi diagonalization. Converges when the off-diagonal
/// Frobenius norm drops below 1e-12. Throws std::invalid_argument when the
/// input is not Hermitian within `herm_tol`.
EigenSystem eig_hermitian(const Mat2& a, double herm_tol = 1e-10);
EigenSystem eig_hermitian(const Mat4& a, double herm_tol = 1e-10);

}  // namespace qsdc

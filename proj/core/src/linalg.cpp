#include "qsdc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsdc {

Mat2 Mat2::identity() {
  Mat2 r;
  r(0, 0) = 1.0;
  r(1, 1) = 1.0;
  return r;
}

Mat2 Mat2::zero() { return Mat2{}; }

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Mat4 Mat4::zero() { return Mat4{}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 2; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

Mat2 operator*(cx s, const Mat2& a) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
  return r;
}

Mat4 operator*(cx s, const Mat4& a) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
  return r;
}

Mat2 adjoint(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

cx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

cx trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat4 swap_qubits(const Mat4& a) {
  // basis index 2x+y -> 2y+x
  auto sw = [](int i) { return ((i & 1) << 1) | (i >> 1); };
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(sw(i), sw(j)) = a(i, j);
  return r;
}

double frobenius_norm(const Mat2& a) {
  double s = 0.0;
  for (const cx& z : a.m) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_norm(const Mat4& a) {
  double s = 0.0;
  for (const cx& z : a.m) s += std::norm(z);
  return std::sqrt(s);
}

double offdiag_frobenius(const Mat4& a) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

bool is_hermitian(const Mat2& a, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

bool is_hermitian(const Mat4& a, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

namespace {

double offdiag_norm(const cx* a, int n) {
  double s = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += std::norm(a[r * n + c]);
  return std::sqrt(s);
}

// One-sided plane rotation zeroing a[p,q]; standard complex Jacobi update.
void jacobi_diagonalize(cx* a, cx* v, int n) {
  for (int i = 0; i < n * n; ++i) v[i] = 0.0;
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  constexpr double kConvergence = 1e-12;
  constexpr int kMaxSweeps = 60;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a, n) < kConvergence) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a[p * n + q]);
        if (r < 1e-14) continue;
        const cx phase = a[p * n + q] / r;
        const double app = std::real(a[p * n + p]);
        const double aqq = std::real(a[q * n + q]);
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^dagger A J with J[p][p]=c, J[p][q]=s*phase,
        // J[q][p]=-s*conj(phase), J[q][q]=c.
        for (int k = 0; k < n; ++k) {
          const cx akp = a[k * n + p];
          const cx akq = a[k * n + q];
          a[k * n + p] = c * akp - s * std::conj(phase) * akq;
          a[k * n + q] = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cx apk = a[p * n + k];
          const cx aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * phase * aqk;
          a[q * n + k] = s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cx vkp = v[k * n + p];
          const cx vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * std::conj(phase) * vkq;
          v[k * n + q] = s * phase * vkp + c * vkq;
        }
      }
    }
  }
}

EigenSystem eig_impl(const cx* m, int n) {
  std::array<cx, 16> a{};
  std::array<cx, 16> v{};
  for (int i = 0; i < n * n; ++i) a[static_cast<std::size_t>(i)] = m[i];

  jacobi_diagonalize(a.data(), v.data(), n);

  std::array<int, 4> order{};
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.begin() + n, [&](int x, int y) {
    return std::real(a[static_cast<std::size_t>(x * n + x)]) > std::real(a[static_cast<std::size_t>(y * n + y)]);
  });

  EigenSystem out;
  out.dim = n;
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.values[static_cast<std::size_t>(j)] = std::real(a[static_cast<std::size_t>(src * n + src)]);
    for (int i = 0; i < n; ++i)
      out.vectors[static_cast<std::size_t>(i * n + j)] = v[static_cast<std::size_t>(i * n + src)];
  }
  return out;
}

}  // namespace

EigenSystem eig_hermitian(const Mat2& a, double herm_tol) {
  if (!is_hermitian(a, herm_tol)) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  return eig_impl(a.m.data(), 2);
}

EigenSystem eig_hermitian(const Mat4& a, double herm_tol) {
  if (!is_hermitian(a, herm_tol)) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  return eig_impl(a.m.data(), 4);
}

}  // namespace qsdc

#include "qsdc/information.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

double fidelity(const StateVector& target, const DensityMatrix& rho) {
  cx v = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      v += std::conj(target.amp[static_cast<std::size_t>(i)]) * rho.mat(i, j) * target.amp[static_cast<std::size_t>(j)];
  return std::sqrt(std::max(0.0, std::real(v)));
}

double singlet_infidelity(const DensityMatrix& rho) {
  const double f = fidelity(bell_state(BellKind::PsiMinus), rho);
  return 1.0 - f * f;
}

namespace {

double entropy_from_values(const double* values, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lambda = values[i];
    if (lambda > 1e-15) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem eig = eig_hermitian(rho.mat);
  return entropy_from_values(eig.values.data(), eig.dim);
}

double von_neumann_entropy(const ReducedDensityMatrix& rho) {
  const EigenSystem eig = eig_hermitian(rho);
  return entropy_from_values(eig.values.data(), eig.dim);
}

void EncodingEnsemble::validate() const {
  double total = 0.0;
  for (const auto& [p, rho] : members) {
    if (p < 0.0) throw std::invalid_argument("ensemble probability is negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("ensemble probabilities do not sum to 1");
}

DensityMatrix EncodingEnsemble::mixture() const {
  Mat4 acc;
  for (const auto& [p, rho] : members) acc = acc + p * rho.mat;
  return DensityMatrix{acc};
}

double holevo_information(const EncodingEnsemble& ensemble) {
  double avg = 0.0;
  for (const auto& [p, rho] : ensemble.members) {
    if (p > 0.0) avg += p * von_neumann_entropy(rho);
  }
  return von_neumann_entropy(ensemble.mixture()) - avg;
}

EncodingEnsemble encoding_ensemble(const DensityMatrix& rho) {
  EncodingEnsemble e;
  e.members.reserve(4);
  for (EncodingOp op : kAllEncodings) {
    e.members.emplace_back(0.25, apply_to_qubit(encoding_matrix(op), Qubit::A, rho));
  }
  return e;
}

}  // namespace qsdc

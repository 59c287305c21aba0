#pragma once

#include <utility>
#include <vector>

#include "qsdc/states.hpp"

namespace qsdc {

/// sqrt(<target|rho|target>); tiny negative round-off is clamped at 0.
double fidelity(const StateVector& target, const DensityMatrix& rho);

/// Shorthand for 1 - fidelity(singlet, rho)^2, the departure of a shared
/// state from the ideal singlet.
double singlet_infidelity(const DensityMatrix& rho);

/// von Neumann entropy in bits, 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const ReducedDensityMatrix& rho);

/// Weighted ensemble of density matrices; probabilities sum to 1.
struct EncodingEnsemble {
  std::vector<std::pair<double, DensityMatrix>> members;

  /// Throws std::invalid_argument on negative weights or weight sum != 1.
  void validate() const;
  DensityMatrix mixture() const;
};

/// S(sum p_i rho_i) - sum p_i S(rho_i), bits.
double holevo_information(const EncodingEnsemble& ensemble);

/// The four equiprobable dense-coding encodings applied to qubit A of rho.
EncodingEnsemble encoding_ensemble(const DensityMatrix& rho);

}  // namespace qsdc

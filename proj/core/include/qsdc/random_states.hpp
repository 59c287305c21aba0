#pragma once

#include "qsdc/random.hpp"
#include "qsdc/states.hpp"

namespace qsdc {

/// Haar-distributed pure two-qubit state.
StateVector random_pure_state(RandomStream& rng);

/// Random full-rank density matrix (normalized G G^dagger, Ginibre G).
DensityMatrix random_density_matrix(RandomStream& rng);

/// Random Hermitian matrix with N(0,1) entries, (G + G^dagger)/2.
Mat4 random_hermitian4(RandomStream& rng);
Mat2 random_hermitian2(RandomStream& rng);

/// Bell-diagonal state with weights drawn uniformly from the simplex.
DensityMatrix random_bell_diagonal(RandomStream& rng);

/// Bell-diagonal state with the given weights, order
/// {PhiPlus, PhiMinus, PsiPlus, PsiMinus}.
DensityMatrix bell_diagonal(const std::array<double, 4>& weights);

}  // namespace qsdc

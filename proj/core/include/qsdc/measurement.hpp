#pragma once

#include <array>
#include <utility>

#include "qsdc/random.hpp"
#include "qsdc/states.hpp"

namespace qsdc {

/// Born-rule probabilities of the four Bell outcomes, order
/// {PhiPlus, PhiMinus, PsiPlus, PsiMinus}.
std::array<double, 4> bell_probabilities(const TwoQubitState& state);

/// Outcome probabilities {p0, p1} for measuring one qubit of a joint state.
std::array<double, 2> outcome_probabilities(const TwoQubitState& state, Qubit which, MeasBasis basis);

/// Projective measurement of one qubit; the returned state is the normalized
/// post-measurement state. Branches with probability below kProbFloor are
/// never sampled.
std::pair<MeasOutcome, TwoQubitState> projective_measure(const TwoQubitState& state, Qubit which,
                                                         MeasBasis basis, RandomStream& rng);

/// Full Bell-basis measurement of the pair; post-state is the sampled Bell
/// state.
std::pair<BellKind, TwoQubitState> bell_measure(const TwoQubitState& state, RandomStream& rng);

/// Measurement of a lone qubit held as a 2x2 density matrix.
std::pair<MeasOutcome, Mat2> measure_single(const Mat2& rho, MeasBasis basis, RandomStream& rng);

}  // namespace qsdc

#include "qsdc/measurement.hpp"

#include <cmath>

namespace qsdc {

namespace {

// Samples index k with probability probs[k]; entries below kProbFloor are
// clamped to zero first.
template <std::size_t N>
std::size_t sample_index(std::array<double, N> probs, RandomStream& rng) {
  double total = 0.0;
  for (double& p : probs) {
    if (p < kProbFloor) p = 0.0;
    total += p;
  }
  const double u = rng.next_double() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < N; ++k) {
    if (probs[k] == 0.0) continue;
    acc += probs[k];
    last = k;
    if (u < acc) return k;
  }
  return last;
}

StateVector project_pure(const StateVector& s, Qubit which, const std::array<cx, 2>& ket) {
  // (|k><k| (x) I) |s> without normalization
  StateVector r;
  if (which == Qubit::A) {
    for (int b = 0; b < 2; ++b) {
      const cx overlap = std::conj(ket[0]) * s.amp[static_cast<std::size_t>(b)] +
                         std::conj(ket[1]) * s.amp[static_cast<std::size_t>(2 + b)];
      r.amp[static_cast<std::size_t>(b)] = ket[0] * overlap;
      r.amp[static_cast<std::size_t>(2 + b)] = ket[1] * overlap;
    }
  } else {
    for (int a = 0; a < 2; ++a) {
      const cx overlap = std::conj(ket[0]) * s.amp[static_cast<std::size_t>(2 * a)] +
                         std::conj(ket[1]) * s.amp[static_cast<std::size_t>(2 * a + 1)];
      r.amp[static_cast<std::size_t>(2 * a)] = ket[0] * overlap;
      r.amp[static_cast<std::size_t>(2 * a + 1)] = ket[1] * overlap;
    }
  }
  return r;
}

Mat4 one_qubit_projector(Qubit which, const std::array<cx, 2>& ket) {
  Mat2 p;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p(i, j) = ket[static_cast<std::size_t>(i)] * std::conj(ket[static_cast<std::size_t>(j)]);
  return which == Qubit::A ? kron(p, Mat2::identity()) : kron(Mat2::identity(), p);
}

}  // namespace

std::array<double, 4> bell_probabilities(const TwoQubitState& state) {
  std::array<double, 4> probs{};
  if (state.is_pure()) {
    for (std::size_t k = 0; k < 4; ++k)
      probs[k] = std::norm(inner(bell_state(kAllBellKinds[k]), state.pure()));
  } else {
    const DensityMatrix rho = state.density();
    for (std::size_t k = 0; k < 4; ++k) {
      const StateVector b = bell_state(kAllBellKinds[k]);
      cx v = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          v += std::conj(b.amp[static_cast<std::size_t>(i)]) * rho.mat(i, j) * b.amp[static_cast<std::size_t>(j)];
      probs[k] = std::max(0.0, std::real(v));
    }
  }
  return probs;
}

std::array<double, 2> outcome_probabilities(const TwoQubitState& state, Qubit which, MeasBasis basis) {
  std::array<double, 2> probs{};
  for (int o = 0; o < 2; ++o) {
    const auto ket = basis_ket(basis, o);
    if (state.is_pure()) {
      probs[static_cast<std::size_t>(o)] = project_pure(state.pure(), which, ket).squared_norm();
    } else {
      const Mat4 proj = one_qubit_projector(which, ket);
      probs[static_cast<std::size_t>(o)] = std::max(0.0, std::real(trace(proj * state.density().mat)));
    }
  }
  return probs;
}

std::pair<MeasOutcome, TwoQubitState> projective_measure(const TwoQubitState& state, Qubit which,
                                                         MeasBasis basis, RandomStream& rng) {
  const auto probs = outcome_probabilities(state, which, basis);
  const std::size_t k = sample_index(probs, rng);
  const auto ket = basis_ket(basis, static_cast<int>(k));

  if (state.is_pure()) {
    const StateVector collapsed = project_pure(state.pure(), which, ket);
    return {MeasOutcome{static_cast<std::uint8_t>(k)}, TwoQubitState::from_pure(collapsed.normalized())};
  }
  const Mat4 proj = one_qubit_projector(which, ket);
  const Mat4 post = proj * state.density().mat * proj;
  const double p = std::real(trace(post));
  return {MeasOutcome{static_cast<std::uint8_t>(k)}, TwoQubitState::from_density(DensityMatrix{(1.0 / p) * post})};
}

std::pair<BellKind, TwoQubitState> bell_measure(const TwoQubitState& state, RandomStream& rng) {
  const auto probs = bell_probabilities(state);
  const std::size_t k = sample_index(probs, rng);
  const BellKind kind = kAllBellKinds[k];
  return {kind, TwoQubitState::from_pure(bell_state(kind))};
}

std::pair<MeasOutcome, Mat2> measure_single(const Mat2& rho, MeasBasis basis, RandomStream& rng) {
  std::array<double, 2> probs{};
  std::array<std::array<cx, 2>, 2> kets = {basis_ket(basis, 0), basis_ket(basis, 1)};
  for (std::size_t o = 0; o < 2; ++o) {
    cx v = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v += std::conj(kets[o][static_cast<std::size_t>(i)]) * rho(i, j) * kets[o][static_cast<std::size_t>(j)];
    probs[o] = std::max(0.0, std::real(v));
  }
  const std::size_t k = sample_index(probs, rng);
  Mat2 post;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) post(i, j) = kets[k][static_cast<std::size_t>(i)] * std::conj(kets[k][static_cast<std::size_t>(j)]);
  return {MeasOutcome{static_cast<std::uint8_t>(k)}, post};
}

}  // namespace qsdc

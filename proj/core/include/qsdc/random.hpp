#pragma once

#include <cstdint>
#include <random>

namespace qsdc {

/// Deterministic random stream. A session stream is derived from the master
/// seed and the session index with splitmix64, so streams are independent and
/// insensitive to execution order. All draws go through fixed 53-bit
/// conversions rather than std distributions, keeping byte-identical output
/// across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t mix(std::uint64_t x);
  static RandomStream for_session(std::uint64_t master_seed, std::uint64_t session_index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in {0, ..., n-1}; n >= 1.
  std::uint32_t next_below(std::uint32_t n);

  bool bernoulli(double p) { return next_double() < p; }

  /// Standard normal deviate (Box-Muller).
  double next_gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qsdc

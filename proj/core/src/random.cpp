#include "qsdc/random.hpp"

#include <cmath>

namespace qsdc {

std::uint64_t RandomStream::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

RandomStream RandomStream::for_session(std::uint64_t master_seed, std::uint64_t session_index) {
  return RandomStream(mix(mix(master_seed) ^ mix(session_index + 1)));
}

std::uint32_t RandomStream::next_below(std::uint32_t n) {
  if (n <= 1) return 0;
  // rejection sampling, unbiased
  const std::uint64_t limit = (~0ull / n) * n;
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return static_cast<std::uint32_t>(x % n);
}

double RandomStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  while (u == 0.0) u = next_double();
  const double v = next_double();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * 3.141592653589793238462643383279502884 * v;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

}  // namespace qsdc

#include "rng.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace korient {

namespace {
// Refuse to sample counts nobody could materialize anyway.
constexpr std::uint64_t kMaxSampleCount = 400'000'000;
}  // namespace

std::uint64_t sample_binomial(Rng& rng, long double trials, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("binomial probability outside [0, 1]");
  if (!(trials >= 0.0L))
    throw std::invalid_argument("negative binomial trial count");
  if (p == 0.0 || trials == 0.0L) return 0;
  if (p == 1.0) {
    if (trials > static_cast<long double>(kMaxSampleCount))
      throw LimitError("binomial sample count exceeds limit");
    return static_cast<std::uint64_t>(llroundl(trials));
  }
  if (p > 0.5) {
    // Sample failures instead; p <= 0.5 keeps the skip distribution wide.
    if (trials > static_cast<long double>(kMaxSampleCount))
      throw LimitError("binomial sample count exceeds limit");
    const std::uint64_t t = static_cast<std::uint64_t>(llroundl(trials));
    return t - sample_binomial(rng, trials, 1.0 - p);
  }

  // Waiting time between successes is Geometric(p): skip = floor(log U / log(1-p)).
  const double log_q = std::log1p(-p);
  long double position = 0.0L;
  std::uint64_t count = 0;
  for (;;) {
    const double skip = std::floor(std::log(rng.unit_positive()) / log_q);
    position += static_cast<long double>(skip) + 1.0L;
    if (position > trials) break;
    if (++count > kMaxSampleCount)
      throw LimitError("binomial sample count exceeds limit");
  }
  return count;
}

}  // namespace korient

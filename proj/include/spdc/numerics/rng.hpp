#ifndef SPDC_NUMERICS_RNG_HPP
#define SPDC_NUMERICS_RNG_HPP

#include <cstdint>

namespace spdc::numerics {

// xoshiro256** with splitmix64 seeding. Integer state only, so identical
// seeds give identical streams on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) { reseed(seed); }

  void reseed(uint64_t seed);
  uint64_t next_u64();

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // true with probability p, decided by a single integer comparison
  bool bernoulli(double p);

  // standard normal, Box-Muller
  double normal();
  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Poisson with arbitrary mean (Knuth for small, PTRS rejection for large)
  uint64_t poisson(double mean);

private:
  uint64_t s_[4] = {};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace spdc::numerics

#endif

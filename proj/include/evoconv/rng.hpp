#ifndef EVOCONV_RNG_HPP
#define EVOCONV_RNG_HPP

#include <cstdint>
#include <random>

namespace evc {

// Deterministic random source. mt19937_64 is fully specified by the
// standard; the distributions below are hand-rolled (the std:: ones are
// implementation-defined) so that seeded runs produce identical streams
// on every platform. Checkpoint reproducibility depends on this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller; pairs are cached
  double normal();

  // unbiased integer in [0, n)
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace evc

#endif

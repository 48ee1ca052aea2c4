#include "evoconv/rng.hpp"

#include <cmath>

namespace evc {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) return 0;
  // rejection sampling to avoid modulo bias
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = bits();
  while (v >= limit) v = bits();
  return static_cast<std::size_t>(v % n);
}

}  // namespace evc

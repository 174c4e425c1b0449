#include "ybkit/sampling.hpp"

#include <cmath>
#include <numbers>

namespace ybkit {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Cplx Sampler::phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

Cplx Sampler::annulus(double lo, double hi) {
  const double rho = std::exp(uniform(std::log(lo), std::log(hi)));
  return rho * phase();
}

}  // namespace ybkit

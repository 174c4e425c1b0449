#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ybkit/chiral_potts.hpp"
#include "ybkit/rmatrix.hpp"

namespace ybkit {

/// 64-bit FNV-1a, used to derive per-check seeds independent of run order.
std::uint64_t fnv1a(std::string_view s);

/// Seeded source of the documented parameter distributions. Uniform draws
/// are built from raw mt19937_64 output so sequences are identical across
/// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  Sampler(std::uint64_t seed, std::string_view stream) : engine_(seed ^ fnv1a(stream)) {}

  /// [0, 1)
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int n) { return int(engine_() % std::uint64_t(n)); }

  /// e^{i theta}, theta uniform in [0, 2 pi)
  Cplx phase();
  /// rho e^{i theta} with log rho uniform in [log lo, log hi]
  Cplx annulus(double lo, double hi);

  /// Chiral Potts point with k' uniform in [0.3, 0.9], a and b uniform unit
  /// phases, root branches uniform. The point is evaluated in Real.
  template <typename Real>
  BasicCPPoint<Real> curve_point(int N, const BasicModulus<Real>& mod) {
    const double ta = uniform(), tb = uniform();
    const int rc = integer(N), rd = integer(N);
    const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
    return sample_curve_point<Real>(mod, N, std::polar(Real(1), two_pi * Real(ta)),
                                    std::polar(Real(1), two_pi * Real(tb)), rc, rd);
  }

  template <typename Real>
  BasicModulus<Real> modulus() {
    return BasicModulus<Real>::FromKPrime(std::complex<Real>(Real(uniform(0.3, 0.9))));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ybkit

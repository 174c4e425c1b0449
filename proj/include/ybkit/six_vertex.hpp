#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ybkit/gauge.hpp"
#include "ybkit/rmatrix.hpp"

namespace ybkit {

/// The three printed gauges of the trigonometric six-vertex R-matrix.
enum class SixVertexGauge { Symmetric, BazhanovStroganov, BBP };

std::string_view to_string(SixVertexGauge g);
/// Accepts "sym", "bs" and "bbp" (case-sensitive).
std::optional<SixVertexGauge> parse_six_vertex_gauge(std::string_view s);

struct SixVertexParams {
  SixVertexGauge gauge = SixVertexGauge::BBP;
  Cplx q{1.0, 0.0};
  Cplx x{1.0, 0.0};
  Cplx y{1.0, 0.0};
  Cplx normalization{1.0, 0.0};

  /// Throws std::invalid_argument for zero or non-finite q, x, y.
  void validate() const;
};

/// Multiplicative form of the symmetric weights: a = C(1 - x/(qy)),
/// b = C q^{-1/2}(1 - x/y), c = C (1 - 1/q)(x/y)^{1/2}.
struct MultiplicativeParams {
  Cplx q, x, y, C;
};

struct SymmetricWeights {
  Cplx a, b, c;
};

/// q = e^{2i eta}, x = e^{2iu}, y = e^{2iv}, C = norm q^{1/2}/(2i) (y/x)^{1/2}, principal branches.
MultiplicativeParams additive_to_multiplicative(Cplx eta, Cplx u, Cplx v, Cplx norm = Cplx(1.0));

/// norm * (sin(eta + v - u), sin(v - u), sin(eta))
SymmetricWeights symmetric_weights_additive(Cplx eta, Cplx u, Cplx v, Cplx norm = Cplx(1.0));
SymmetricWeights symmetric_weights(const MultiplicativeParams& m);

/// 4x4 R-matrix of the chosen gauge, rows = outgoing pair, columns =
/// incoming pair, basis 00, 01, 10, 11.
RMatrix build_six_vertex(const SixVertexParams& p);

/// q == 1 or x == y: the matrix degenerates to a multiple of identity/SWAP.
bool is_degenerate(const SixVertexParams& p);

enum class StaggeredDirection { BSToBBP, BBPToBS };
enum class UniformDirection { SymToBS, BSToSym };

/// Staggered bridge with lambda = q^{1/8}: pre/post left legs carry
/// diag(lambda, 1/lambda), right legs diag(1/lambda, lambda).
GaugeSandwich staggered_connect(StaggeredDirection dir, Cplx q);

/// Uniform (similarity) bridge with mu = (x/y)^{1/8}: pre_left = diag(1/mu, mu),
/// pre_right = diag(mu, 1/mu), post legs the inverses. Leaves the corners and
/// the b-entries alone and moves (x/y)^{1/2} between the two c-entries.
GaugeSandwich uniform_connect(UniformDirection dir, Cplx x, Cplx y);

enum class Parity { Odd, Even };

/// q = exp(2 pi i j / N) with gcd(j, N) = 1.
struct RootOfUnitySpec {
  int N = 2;
  int j = 1;

  Cplx q() const;
  Parity parity() const { return N % 2 == 0 ? Parity::Even : Parity::Odd; }
  /// Throws std::invalid_argument for N < 2 or gcd(j, N) != 1.
  void validate() const;
};

struct Q1Resolution {
  std::vector<Cplx> q1_values;  ///< one value for odd N, both square roots of q for even N
  std::vector<Cplx> q1_pow_N;   ///< q1^N for each entry of q1_values
  Parity parity_verdict = Parity::Odd;
  double pow_residual = 0.0;     ///< max |q1^N - (+1 odd / -1 even)|
  double square_residual = 0.0;  ///< max |q1^2 - q|
};

/// Odd N: q1 = q^{(N+1)/2}, certifying q1^N = 1 and q1^2 = q. Even N: both
/// roots of q1^2 = q, certifying q1^N = -1. Throws std::runtime_error if a
/// certificate misses 1e-12.
Q1Resolution resolve_q1(const RootOfUnitySpec& spec);

}  // namespace ybkit

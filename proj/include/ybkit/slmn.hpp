#pragma once

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ybkit/rmatrix.hpp"

namespace ybkit {

/// Parameters of the sl(m|n) vertex model.
///
/// States are 0..m+n-1; the first m carry grading +1, the rest -1. The
/// weight w^{cd}_{ab} with lower (incoming) indices a, b and upper indices
/// c, d is stored as R(a, b -> d, c): the upper pair is read right to left.
/// With this reading the (2,0) root-of-unity reduction is the BBP gauge
/// matrix entry for entry.
struct SlmnParams {
  int m = 2;
  int n = 0;
  Cplx eta{0.0, 0.0};
  Eigen::MatrixXcd twist;    ///< G(a,b) for a != b; diagonal unused
  Eigen::MatrixX2cd gauge_p; ///< row a: (p_{+a}, p_{-a})
  Eigen::MatrixX2cd gauge_q; ///< row a: (q_{+a}, q_{-a})
  Cplx normalization{1.0, 0.0};

  int size() const { return m + n; }
  int grading(int a) const { return a < m ? 1 : -1; }

  /// Unit twists and gauges.
  static SlmnParams Untwisted(int m, int n, Cplx eta);

  /// Throws std::invalid_argument on shape errors, m+n < 2, zero gauges or
  /// G(a,b) G(b,a) != 1 beyond 1e-14.
  void validate() const;
};

/// Additive form: w^{aa}_{aa} = N sinh(eta + eps_a (p0 - q0)) g_aa,
/// w^{ab}_{ba} = N G_ab sinh(p0 - q0) g_ab, w^{ba}_{ba} = N e^{(p0-q0) sign(a-b)} sinh(eta) g'_ab.
RMatrix build_slmn_additive(const SlmnParams& p, Cplx p0, Cplx q0);

/// N' = N q^{1/2}/2 (y/x)^{1/2} with q^{1/2} = e^{eta}.
Cplx multiplicative_normalization(const SlmnParams& p, Cplx x, Cplx y);

/// Multiplicative form with q = e^{2 eta}, x = e^{2 q0}, y = e^{2 p0}.
/// Equals build_slmn_additive(p, log(y)/2, log(x)/2) on the principal sector.
RMatrix build_slmn_multiplicative(const SlmnParams& p, Cplx x, Cplx y);

/// Root-of-unity specialisation: q = exp(2 pi i j / N), unit gauges,
/// N' = 1 and G_ab = q^{sign(a-b)/2}.
struct RootReducedSpec {
  int m = 2;
  int n = 0;
  int N = 3;
  int j = 1;
  Cplx x{1.0, 0.0};
  Cplx y{1.0, 0.0};

  Cplx q() const;
  void validate() const;
};

/// G_ab = q^{+1/2} (a > b), q^{-1/2} (a < b), principal root.
Eigen::MatrixXcd root_reduced_twist(int m, int n, Cplx q);

/// Weights free of fractional powers: diagonal 1 - x/(qy) or x/y - 1/q,
/// exchange 1 - x/y (a > b) or (1 - x/y)/q (a < b), transfer (1 - 1/q) x/y
/// (a < b) or 1 - 1/q (a > b).
RMatrix build_slmn_root_of_unity(const RootReducedSpec& s);

/// Same closed form evaluated at an arbitrary nonzero q.
RMatrix slmn_reduced_weights(int m, int n, Cplx q, Cplx x, Cplx y);

/// Coefficients of f = c0 + c1/q + c2 (x/y) + c3 (x/y)/q.
struct SpanFit {
  std::array<Cplx, 4> coefficients{};
  double fit_residual = 0.0;         ///< max |f - fit| over the held-out samples
  double integrality_distance = 0.0; ///< max distance of a coefficient to {-1, 0, 1}
};

using EntryFunction = std::function<Cplx(Cplx q, Cplx x, Cplx y)>;

/// Fits `f` on four (q, x/y) samples drawn from the first two entries of
/// `q_values` and checks the fit on four more that also use the third.
SpanFit fit_monomial_span(const EntryFunction& f, std::span<const Cplx> q_values);

struct SpanEntry {
  std::array<int, 4> index{};  ///< (in-left, in-right, out-left, out-right)
  SpanFit fit;
};

class SpanViolation : public std::runtime_error {
 public:
  SpanViolation(std::array<int, 4> index, const SpanFit& fit);
  std::array<int, 4> index;
  SpanFit fit;
};

/// Fits every structurally nonzero entry of the reduced matrix. The q
/// samples are the requested q plus two of the primitive roots exp(2 pi i/N'),
/// N' = 3, 4, 5 that differ from it. Throws SpanViolation if an entry misses
/// fit or integrality tolerance 1e-12.
std::vector<SpanEntry> monomial_span_certify(const RootReducedSpec& s);

}  // namespace ybkit

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybkit/rmatrix.hpp"

namespace ybkit {

// Chiral Potts rapidities, Boltzmann weights and their compositions.
//
// Everything here is templated on the real type. The certification suite
// runs in long double: near-pole samples amplify the O(eps) curve error of
// a sampled point by up to ~1e8, which double precision cannot absorb at the
// star-triangle tolerance.

template <typename Real>
std::complex<Real> unit_root(int N, long long j) {
  const long long jj = ((j % N) + N) % N;
  return std::polar(Real(1), Real(2) * std::numbers::pi_v<Real> * Real(jj) / Real(N));
}

/// Modulus pair with k^2 + k'^2 = 1.
template <typename Real>
struct BasicModulus {
  std::complex<Real> k{1};
  std::complex<Real> k_prime{0};

  static BasicModulus FromKPrime(std::complex<Real> kp) {
    return {std::sqrt(Real(1) - kp * kp), kp};
  }

  Real residual() const { return std::abs(k * k + k_prime * k_prime - Real(1)); }

  void validate() const {
    if (!(residual() < Real(1e-12))) throw std::invalid_argument("modulus: k^2 + k'^2 != 1");
  }

  template <typename Other>
  BasicModulus<Other> cast() const {
    return {std::complex<Other>(k), std::complex<Other>(k_prime)};
  }
};

/// A point (a, b, c, d) on the N-state chiral Potts curve.
template <typename Real>
struct BasicCPPoint {
  using C = std::complex<Real>;
  C a, b, c, d;
  BasicModulus<Real> modulus;
  int N = 2;

  /// max of the two curve-equation defects over the largest term magnitude.
  Real curve_residual() const {
    const C aN = std::pow(a, N), bN = std::pow(b, N), cN = std::pow(c, N), dN = std::pow(d, N);
    const C& k = modulus.k;
    const C& kp = modulus.k_prime;
    const Real e1 = std::abs(aN + kp * bN - k * dN);
    const Real e2 = std::abs(kp * aN + bN - k * cN);
    const Real scale = std::max({std::abs(aN), std::abs(kp * bN), std::abs(k * dN), std::abs(kp * aN),
                                 std::abs(bN), std::abs(k * cN), std::numeric_limits<Real>::min()});
    return std::max(e1, e2) / scale;
  }

  BasicCPPoint scaled(C lambda) const { return {lambda * a, lambda * b, lambda * c, lambda * d, modulus, N}; }

  template <typename Other>
  BasicCPPoint<Other> cast() const {
    using O = std::complex<Other>;
    return {O(a), O(b), O(c), O(d), modulus.template cast<Other>(), N};
  }
};

using Modulus = BasicModulus<double>;
using CPPoint = BasicCPPoint<double>;

template <typename Real>
std::complex<Real> principal_root(std::complex<Real> z, int N) {
  if (z == std::complex<Real>(0)) return z;
  return std::exp(std::log(z) / Real(N));
}

/// d = (a^N + k' b^N)^{1/N} k^{-1/N} w^{root_d}, c = (k' a^N + b^N)^{1/N} k^{-1/N} w^{root_c}.
template <typename Real>
BasicCPPoint<Real> sample_curve_point(const BasicModulus<Real>& mod, int N, std::complex<Real> a,
                                      std::complex<Real> b, int root_c, int root_d) {
  if (N < 2) throw std::invalid_argument("sample_curve_point: N must be at least 2");
  if (mod.k == std::complex<Real>(0)) throw std::invalid_argument("sample_curve_point: k = 0");
  if (root_c < 0 || root_c >= N || root_d < 0 || root_d >= N)
    throw std::invalid_argument("sample_curve_point: root index outside [0, N)");
  mod.validate();
  const auto aN = std::pow(a, N), bN = std::pow(b, N);
  BasicCPPoint<Real> p{a, b, {}, {}, mod, N};
  p.d = principal_root<Real>((aN + mod.k_prime * bN) / mod.k, N) * unit_root<Real>(N, root_d);
  p.c = principal_root<Real>((mod.k_prime * aN + bN) / mod.k, N) * unit_root<Real>(N, root_c);
  if (!(p.curve_residual() < Real(1e-12))) throw std::runtime_error("sample_curve_point: curve certificate failed");
  return p;
}

/// Normalised weight tables, W[0] = Wb[0] = 1.
template <typename Real>
struct BasicCPWeights {
  using Vector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
  int N = 2;
  Vector W;
  Vector Wb;
};

using CPWeights = BasicCPWeights<double>;

/// A vanishing weight denominator at j.
class PoleConfiguration : public std::runtime_error {
 public:
  PoleConfiguration(const char* table, int j_)
      : std::runtime_error(std::string("pole configuration: ") + table + " denominator vanishes at j = " +
                           std::to_string(j_)),
        j(j_) {}
  int j;
};

namespace detail {

template <typename Real>
void require_compatible(const BasicCPPoint<Real>& p, const BasicCPPoint<Real>& q) {
  if (p.N != q.N) throw std::invalid_argument("chiral Potts: points have different N");
  if (std::abs(p.modulus.k - q.modulus.k) > Real(1e-12) ||
      std::abs(p.modulus.k_prime - q.modulus.k_prime) > Real(1e-12))
    throw std::invalid_argument("chiral Potts: points have different moduli");
}

template <typename Real>
struct Factors {
  std::complex<Real> num, den;
};

// j-th ratio factor of W (bar = false) or W-bar (bar = true).
template <typename Real>
Factors<Real> factor(const BasicCPPoint<Real>& p, const BasicCPPoint<Real>& q, int j, bool bar) {
  const auto wj = unit_root<Real>(p.N, j);
  if (!bar) return {p.d * q.b - p.a * q.c * wj, p.b * q.d - p.c * q.a * wj};
  const auto w = unit_root<Real>(p.N, 1);
  return {w * p.a * q.d - p.d * q.a * wj, p.c * q.b - p.b * q.c * wj};
}

template <typename Real>
Real point_scale(const BasicCPPoint<Real>& p) {
  return std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c), std::abs(p.d)});
}

}  // namespace detail

/// W_pq(n) = prod_{j=1..n} (d_p b_q - a_p c_q w^j)/(b_p d_q - c_p a_q w^j),
/// Wb_pq(n) = prod_{j=1..n} (w a_p d_q - d_p a_q w^j)/(c_p b_q - b_p c_q w^j).
/// Throws PoleConfiguration when a denominator for j in [1, N-1] vanishes.
template <typename Real>
BasicCPWeights<Real> cp_weight_tables(const BasicCPPoint<Real>& p, const BasicCPPoint<Real>& q) {
  detail::require_compatible(p, q);
  const int N = p.N;
  const Real tiny = Real(1e-14) * detail::point_scale(p) * detail::point_scale(q);
  BasicCPWeights<Real> out;
  out.N = N;
  out.W.resize(N);
  out.Wb.resize(N);
  out.W(0) = out.Wb(0) = std::complex<Real>(1);
  for (int j = 1; j < N; ++j) {
    const auto f = detail::factor(p, q, j, false);
    const auto g = detail::factor(p, q, j, true);
    if (!(std::abs(f.den) > tiny)) throw PoleConfiguration("W", j);
    if (!(std::abs(g.den) > tiny)) throw PoleConfiguration("Wbar", j);
    out.W(j) = out.W(j - 1) * f.num / f.den;
    out.Wb(j) = out.Wb(j - 1) * g.num / g.den;
  }
  return out;
}

/// max over both tables of |prod_{j=1..N} factor_j - 1|: on the curve the
/// product wraps around to W(0).
template <typename Real>
Real cyclic_closure(const BasicCPPoint<Real>& p, const BasicCPPoint<Real>& q) {
  detail::require_compatible(p, q);
  Real worst = 0;
  for (bool bar : {false, true}) {
    std::complex<Real> prod(1);
    for (int j = 1; j <= p.N; ++j) {
      const auto f = detail::factor(p, q, j, bar);
      prod *= f.num / f.den;
    }
    worst = std::max(worst, std::abs(prod - Real(1)));
  }
  return worst;
}

/// Star-triangle ratio constancy.
///
/// L(a,b,c) = sum_d Wb_qr(b-d) W_pr(a-d) Wb_pq(d-c) and
/// R(a,b,c) = W_pq(a-b) Wb_pr(b-c) W_qr(a-c); returns
/// max |L/R - L0/R0| / |L0/R0| with (L0, R0) at (0,0,0).
template <typename Real>
Real star_triangle_residual(const BasicCPPoint<Real>& p, const BasicCPPoint<Real>& q,
                            const BasicCPPoint<Real>& r) {
  detail::require_compatible(p, q);
  detail::require_compatible(p, r);
  const int N = p.N;
  const auto pq = cp_weight_tables(p, q);
  const auto pr = cp_weight_tables(p, r);
  const auto qr = cp_weight_tables(q, r);
  const auto mod = [N](int v) { return ((v % N) + N) % N; };
  std::complex<Real> ref;
  Real worst = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        std::complex<Real> L(0);
        for (int d = 0; d < N; ++d) L += qr.Wb(mod(b - d)) * pr.W(mod(a - d)) * pq.Wb(mod(d - c));
        const std::complex<Real> R = pq.W(mod(a - b)) * pr.Wb(mod(b - c)) * qr.W(mod(a - c));
        if (R == std::complex<Real>(0))
          throw std::runtime_error("star_triangle_residual: degenerate configuration, triangle weight vanishes");
        const auto ratio = L / R;
        if (a == 0 && b == 0 && c == 0) {
          ref = ratio;
          if (ref == std::complex<Real>(0))
            throw std::runtime_error("star_triangle_residual: degenerate configuration, reference ratio vanishes");
          continue;
        }
        worst = std::max(worst, std::abs(ratio - ref) / std::abs(ref));
      }
  return worst;
}

/// Smallest weight-factor numerator or denominator over all ordered pairs of
/// points, relative to the point scales. Zero on the pole set. Star sums near
/// a pole cancel heavily, so the star-triangle residual degrades roughly as
/// eps / margin^2.
template <typename Real>
Real pole_margin(std::span<const BasicCPPoint<Real>> pts) {
  Real margin = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const Real scale = detail::point_scale(pts[i]) * detail::point_scale(pts[j]);
      for (int t = 1; t <= pts[i].N; ++t)
        for (bool bar : {false, true}) {
          const auto f = detail::factor(pts[i], pts[j], t, bar);
          margin = std::min({margin, std::abs(f.num) / scale, std::abs(f.den) / scale});
        }
    }
  return margin;
}

/// Default margin for sampled star-triangle triples.
inline constexpr double kStarTrianglePoleMargin = 1e-3;

/// Interaction-round-a-face weight w(a, b, c, d), corners in cyclic order
/// around the face: a-b top edge, b-c right edge, d-c bottom edge, a-d left
/// edge.
template <typename Real>
class BasicIRFWeight {
 public:
  using C = std::complex<Real>;

  explicit BasicIRFWeight(int N) : N_(N), table_(std::size_t(N) * N * N * N, C(0)) {
    if (N < 2) throw std::invalid_argument("IRF weight: N must be at least 2");
  }

  int N() const { return N_; }

  C operator()(int a, int b, int c, int d) const { return table_[index(a, b, c, d)]; }
  C& operator()(int a, int b, int c, int d) {
    certified_ = false;
    return table_[index(a, b, c, d)];
  }

  /// max |w(a+1, b+1, c+1, d+1) - w(a, b, c, d)|
  Real translation_defect() const {
    Real worst = 0;
    for (int a = 0; a < N_; ++a)
      for (int b = 0; b < N_; ++b)
        for (int c = 0; c < N_; ++c)
          for (int d = 0; d < N_; ++d)
            worst = std::max(worst, std::abs((*this)(wrap(a + 1), wrap(b + 1), wrap(c + 1), wrap(d + 1)) -
                                             (*this)(a, b, c, d)));
    return worst;
  }

  /// Marks the table as translation invariant if the defect is exactly zero.
  bool certify() {
    certified_ = translation_defect() == Real(0);
    return certified_;
  }
  bool certified() const { return certified_; }

 private:
  int wrap(int v) const { return ((v % N_) + N_) % N_; }
  std::size_t index(int a, int b, int c, int d) const {
    return ((std::size_t(wrap(a)) * N_ + wrap(b)) * N_ + wrap(c)) * N_ + wrap(d);
  }

  int N_;
  std::vector<C> table_;
  bool certified_ = false;
};

using IRFWeight = BasicIRFWeight<double>;

enum class WeightKind { W, Wbar };

/// Crossing of a line from the first double line (p or p2) with one from
/// the second (q or q2); weights are evaluated as W_{uv} with u from the
/// first line.
enum class Crossing { PQ, PQ2, P2Q2, P2Q };

/// One of the four weights of a star (edge centre-corner) or a diamond
/// (edge between neighbouring corners).
struct FacePlacement {
  WeightKind kind;
  Crossing crossing;
  bool forward;  ///< star: argument corner - centre (else centre - corner); diamond: first - second
};

using Arrangement = std::array<FacePlacement, 4>;

/// Star weights, one per corner a, b, c, d:
///
///          a --W(pq)--+            S(a,b,c,d) = sum_e W_pq(a-e) Wb_pq2(e-b)
///                     e --Wb(pq2)-- b                  W_p2q2(e-c) Wb_p2q(d-e)
///          d --Wb(p2q)+
///                     +--W(p2q2)-- c
///
/// Validated by the uniform Yang-Baxter equation at N = 2 and N = 3.
inline constexpr Arrangement kStarArrangement{{
    {WeightKind::W, Crossing::PQ, true},
    {WeightKind::Wbar, Crossing::PQ2, false},
    {WeightKind::W, Crossing::P2Q2, false},
    {WeightKind::Wbar, Crossing::P2Q, true},
}};

/// Diamond weights on the edges a-b, b-c, c-d, d-a.
inline constexpr Arrangement kDiamondArrangement{{
    {WeightKind::W, Crossing::PQ, true},
    {WeightKind::Wbar, Crossing::PQ2, true},
    {WeightKind::W, Crossing::P2Q2, true},
    {WeightKind::Wbar, Crossing::P2Q, true},
}};

/// A chiral Potts "double line" rapidity pair (p, p2).
template <typename Real>
struct BasicDoubleLine {
  BasicCPPoint<Real> first;
  BasicCPPoint<Real> second;
};

namespace detail {

template <typename Real>
using Table = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
std::array<Table<Real>, 4> placement_tables(const Arrangement& arr, const BasicDoubleLine<Real>& P,
                                            const BasicDoubleLine<Real>& Q) {
  std::array<Table<Real>, 4> out;
  for (int k = 0; k < 4; ++k) {
    const auto& u = (arr[k].crossing == Crossing::PQ || arr[k].crossing == Crossing::PQ2) ? P.first : P.second;
    const auto& v = (arr[k].crossing == Crossing::PQ || arr[k].crossing == Crossing::P2Q) ? Q.first : Q.second;
    const auto w = cp_weight_tables(u, v);
    out[k] = arr[k].kind == WeightKind::W ? w.W : w.Wb;
  }
  return out;
}

}  // namespace detail

/// Star composition: sum over the centre spin of the four corner weights.
/// The centre is summed as e = a - t so every weight argument is a
/// difference of corner spins and translation invariance is exact.
template <typename Real>
BasicIRFWeight<Real> compose_star(const BasicDoubleLine<Real>& P, const BasicDoubleLine<Real>& Q,
                                  const Arrangement& arr = kStarArrangement) {
  detail::require_compatible(P.first, P.second);
  detail::require_compatible(P.first, Q.first);
  detail::require_compatible(P.first, Q.second);
  const int N = P.first.N;
  const auto tables = detail::placement_tables(arr, P, Q);
  const auto mod = [N](int v) { return ((v % N) + N) % N; };
  BasicIRFWeight<Real> w(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          const int corners[4] = {0, b - a, c - a, d - a};  // relative to a
          std::complex<Real> sum(0);
          for (int t = 0; t < N; ++t) {
            const int centre = -t;
            std::complex<Real> term(1);
            for (int k = 0; k < 4; ++k) {
              const int diff = arr[k].forward ? corners[k] - centre : centre - corners[k];
              term *= tables[k](mod(diff));
            }
            sum += term;
          }
          w(a, b, c, d) = sum;
        }
  w.certify();
  return w;
}

/// Diamond composition: product of four edge weights, no internal sum.
template <typename Real>
BasicIRFWeight<Real> compose_diamond(const BasicDoubleLine<Real>& P, const BasicDoubleLine<Real>& Q,
                                     const Arrangement& arr = kDiamondArrangement) {
  detail::require_compatible(P.first, P.second);
  detail::require_compatible(P.first, Q.first);
  detail::require_compatible(P.first, Q.second);
  const int N = P.first.N;
  const auto tables = detail::placement_tables(arr, P, Q);
  const auto mod = [N](int v) { return ((v % N) + N) % N; };
  BasicIRFWeight<Real> w(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          const int s[4] = {a, b, c, d};
          std::complex<Real> term(1);
          for (int k = 0; k < 4; ++k) {
            const int first = s[k], second = s[(k + 1) % 4];
            term *= tables[k](mod(arr[k].forward ? first - second : second - first));
          }
          w(a, b, c, d) = term;
        }
  w.certify();
  return w;
}

/// Wu-Kadanoff-Wegner map onto the edge differences n1 = a-b (top),
/// n2 = d-c (bottom), n3 = a-d (left), n4 = b-c (right):
/// V(in: n3, n2 -> out: n4, n1) = w(a, b, c, d). The charge rule
/// n1 + n4 = n2 + n3 (mod N) is conservation of in/out sums; other entries
/// are zero.
template <typename Real>
BasicRMatrix<std::complex<Real>> wkw_vertex_map(const BasicIRFWeight<Real>& w) {
  if (!w.certified()) throw std::invalid_argument("wkw_vertex_map: IRF weight lacks a translation-invariance certificate");
  const int N = w.N();
  const auto mod = [N](int v) { return ((v % N) + N) % N; };
  BasicRMatrix<std::complex<Real>> V(N, N);
  for (int n3 = 0; n3 < N; ++n3)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1 = 0; n1 < N; ++n1) {
        const int n4 = mod(n2 + n3 - n1);
        const int a = 0, b = mod(-n1), d = mod(-n3), c = mod(b - n4);
        V(n3, n2, n4, n1) = w(a, b, c, d);
      }
  if (!V.all_finite()) throw std::domain_error("wkw_vertex_map: non-finite weight");
  return V;
}

enum class Composition { Star, Diamond };

/// Uniform Yang-Baxter residual for the composed-and-mapped matrices
/// R(P,Q), R(P,R), R(Q,R).
template <typename Real>
YbeResidual<Real> uniform_ybe_4cp(const BasicDoubleLine<Real>& P, const BasicDoubleLine<Real>& Q,
                                  const BasicDoubleLine<Real>& R, Composition kind = Composition::Star,
                                  const Arrangement* arrangement = nullptr) {
  const auto build = [&](const BasicDoubleLine<Real>& X, const BasicDoubleLine<Real>& Y) {
    if (kind == Composition::Star) return wkw_vertex_map(compose_star(X, Y, arrangement ? *arrangement : kStarArrangement));
    return wkw_vertex_map(compose_diamond(X, Y, arrangement ? *arrangement : kDiamondArrangement));
  };
  return ybe_residual(build(P, Q), build(P, R), build(Q, R));
}

}  // namespace ybkit

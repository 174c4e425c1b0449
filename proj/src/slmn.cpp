#include "ybkit/slmn.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace ybkit {

namespace {

bool finite_nonzero(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && z != Cplx(0.0); }

// p_{+a} q_{-b} / (q_{+b} p_{-a})
Cplx gauge_ratio(const SlmnParams& p, int a, int b) {
  return p.gauge_p(a, 0) * p.gauge_q(b, 1) / (p.gauge_q(b, 0) * p.gauge_p(a, 1));
}

// p_{+b} q_{-a} / (q_{+b} p_{-a})
Cplx transfer_gauge_ratio(const SlmnParams& p, int a, int b) {
  return p.gauge_p(b, 0) * p.gauge_q(a, 1) / (p.gauge_q(b, 0) * p.gauge_p(a, 1));
}

Cplx primitive_root(int N, int j) {
  const int jj = ((j % N) + N) % N;
  return std::polar(1.0, 2.0 * std::numbers::pi * jj / N);
}

}  // namespace

SlmnParams SlmnParams::Untwisted(int m, int n, Cplx eta) {
  SlmnParams p;
  p.m = m;
  p.n = n;
  p.eta = eta;
  const int d = m + n;
  p.twist = Eigen::MatrixXcd::Ones(d, d);
  p.gauge_p = Eigen::MatrixX2cd::Ones(d, 2);
  p.gauge_q = Eigen::MatrixX2cd::Ones(d, 2);
  return p;
}

void SlmnParams::validate() const {
  if (m < 0 || n < 0 || m + n < 2) throw std::invalid_argument("sl(m|n): need m, n >= 0 and m + n >= 2");
  const int d = size();
  if (twist.rows() != d || twist.cols() != d) throw std::invalid_argument("sl(m|n): twist must be (m+n) x (m+n)");
  if (gauge_p.rows() != d || gauge_q.rows() != d) throw std::invalid_argument("sl(m|n): gauge tables need m+n rows");
  if (!std::isfinite(std::abs(eta))) throw std::invalid_argument("sl(m|n): eta must be finite");
  for (int a = 0; a < d; ++a) {
    for (int s = 0; s < 2; ++s) {
      if (!finite_nonzero(gauge_p(a, s)) || !finite_nonzero(gauge_q(a, s))) {
        throw std::invalid_argument("sl(m|n): gauge component for state " + std::to_string(a) + " is zero");
      }
    }
    for (int b = a + 1; b < d; ++b) {
      if (std::abs(twist(a, b) * twist(b, a) - 1.0) > 1e-14) {
        throw std::invalid_argument("sl(m|n): G(" + std::to_string(a) + "," + std::to_string(b) +
                                    ") G(" + std::to_string(b) + "," + std::to_string(a) + ") != 1");
      }
    }
  }
}

RMatrix build_slmn_additive(const SlmnParams& p, Cplx p0, Cplx q0) {
  p.validate();
  const int d = p.size();
  const Cplx delta = p0 - q0;
  const Cplx& N = p.normalization;
  RMatrix r(d, d);
  for (int a = 0; a < d; ++a) {
    r(a, a, a, a) = N * std::sinh(p.eta + double(p.grading(a)) * delta) * gauge_ratio(p, a, a);
  }
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      const double sgn = a > b ? 1.0 : -1.0;
      r(b, a, b, a) = N * p.twist(a, b) * std::sinh(delta) * gauge_ratio(p, a, b);
      r(b, a, a, b) = N * std::exp(delta * sgn) * std::sinh(p.eta) * transfer_gauge_ratio(p, a, b);
    }
  }
  require_well_formed(r, SupportRule::Multiset, "build_slmn_additive");
  return r;
}

Cplx multiplicative_normalization(const SlmnParams& p, Cplx x, Cplx y) {
  return p.normalization * std::exp(p.eta) / 2.0 * std::sqrt(y / x);
}

RMatrix build_slmn_multiplicative(const SlmnParams& p, Cplx x, Cplx y) {
  p.validate();
  if (!finite_nonzero(x) || !finite_nonzero(y)) throw std::invalid_argument("sl(m|n): x and y must be nonzero");
  const int d = p.size();
  const Cplx qi = std::exp(-2.0 * p.eta);
  const Cplx q_mhalf = std::exp(-p.eta);
  const Cplx ratio = x / y;
  const Cplx Np = multiplicative_normalization(p, x, y);
  RMatrix r(d, d);
  for (int a = 0; a < d; ++a) {
    const Cplx w = p.grading(a) > 0 ? 1.0 - qi * ratio : ratio - qi;
    r(a, a, a, a) = Np * w * gauge_ratio(p, a, a);
  }
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      r(b, a, b, a) = Np * p.twist(a, b) * q_mhalf * (1.0 - ratio) * gauge_ratio(p, a, b);
      const Cplx t = a < b ? (1.0 - qi) * ratio : 1.0 - qi;
      r(b, a, a, b) = Np * t * transfer_gauge_ratio(p, a, b);
    }
  }
  require_well_formed(r, SupportRule::Multiset, "build_slmn_multiplicative");
  return r;
}

Cplx RootReducedSpec::q() const { return primitive_root(N, j); }

void RootReducedSpec::validate() const {
  if (m < 0 || n < 0 || m + n < 2) throw std::invalid_argument("sl(m|n): need m, n >= 0 and m + n >= 2");
  if (N < 2) throw std::invalid_argument("sl(m|n): N must be at least 2");
  if (std::gcd(j, N) != 1) {
    throw std::invalid_argument("sl(m|n): gcd(j, N) = " + std::to_string(std::gcd(j, N)) +
                                ", q is not a primitive root of unity");
  }
  if (!finite_nonzero(x) || !finite_nonzero(y)) throw std::invalid_argument("sl(m|n): x and y must be nonzero");
}

Eigen::MatrixXcd root_reduced_twist(int m, int n, Cplx q) {
  const int d = m + n;
  const Cplx half = std::sqrt(q);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Ones(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a != b) g(a, b) = a > b ? half : 1.0 / half;
  return g;
}

RMatrix slmn_reduced_weights(int m, int n, Cplx q, Cplx x, Cplx y) {
  if (!finite_nonzero(q)) throw std::invalid_argument("sl(m|n): q must be nonzero");
  const int d = m + n;
  const Cplx qi = 1.0 / q;
  const Cplx ratio = x / y;
  RMatrix r(d, d);
  for (int a = 0; a < d; ++a) r(a, a, a, a) = a < m ? 1.0 - qi * ratio : ratio - qi;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      r(b, a, b, a) = a > b ? 1.0 - ratio : qi * (1.0 - ratio);
      r(b, a, a, b) = a < b ? (1.0 - qi) * ratio : 1.0 - qi;
    }
  }
  return r;
}

RMatrix build_slmn_root_of_unity(const RootReducedSpec& s) {
  s.validate();
  RMatrix r = slmn_reduced_weights(s.m, s.n, s.q(), s.x, s.y);
  require_well_formed(r, SupportRule::Multiset, "build_slmn_root_of_unity");
  return r;
}

SpanFit fit_monomial_span(const EntryFunction& f, std::span<const Cplx> q_values) {
  if (q_values.size() < 3) throw std::invalid_argument("fit_monomial_span: need three q values");
  struct Sample {
    int q_slot;
    Cplx x, y;
  };
  // Rapidity pairs at scattered moduli and phases; the first four pin the
  // fit, the last four are held out.
  const Sample samples[8] = {
      {0, std::polar(0.7, 0.4), std::polar(1.1, -0.9)},  {0, std::polar(1.3, 2.2), std::polar(0.8, 0.3)},
      {1, std::polar(0.9, -1.7), std::polar(1.2, 1.1)},  {1, std::polar(1.6, 0.8), std::polar(0.6, 2.9)},
      {0, std::polar(1.05, -2.6), std::polar(0.95, 0.5)}, {1, std::polar(0.55, 1.9), std::polar(1.4, -0.2)},
      {2, std::polar(1.2, 0.1), std::polar(0.75, -1.3)}, {2, std::polar(0.85, 2.7), std::polar(1.25, 1.6)},
  };
  const auto basis = [&](const Sample& s) {
    const Cplx qi = 1.0 / q_values[s.q_slot];
    const Cplx r = s.x / s.y;
    return Eigen::RowVector4cd(1.0, qi, r, qi * r);
  };
  Eigen::Matrix4cd A;
  Eigen::Vector4cd rhs;
  for (int k = 0; k < 4; ++k) {
    A.row(k) = basis(samples[k]);
    rhs(k) = f(q_values[samples[k].q_slot], samples[k].x, samples[k].y);
  }
  const Eigen::Vector4cd c = A.fullPivLu().solve(rhs);
  SpanFit fit;
  for (int k = 0; k < 4; ++k) {
    fit.coefficients[k] = c(k);
    const double re = c(k).real();
    const double nearest = std::max(-1.0, std::min(1.0, std::round(re)));
    fit.integrality_distance = std::max(fit.integrality_distance, std::abs(c(k) - Cplx(nearest)));
  }
  for (int k = 4; k < 8; ++k) {
    const Cplx model = basis(samples[k]) * c;
    const Cplx actual = f(q_values[samples[k].q_slot], samples[k].x, samples[k].y);
    fit.fit_residual = std::max(fit.fit_residual, std::abs(model - actual));
  }
  return fit;
}

SpanViolation::SpanViolation(std::array<int, 4> index_, const SpanFit& fit_)
    : std::runtime_error("monomial span violated at entry (" + std::to_string(index_[0]) + "," +
                         std::to_string(index_[1]) + " -> " + std::to_string(index_[2]) + "," +
                         std::to_string(index_[3]) + "): fit residual " + std::to_string(fit_.fit_residual) +
                         ", integrality distance " + std::to_string(fit_.integrality_distance)),
      index(index_),
      fit(fit_) {}

std::vector<SpanEntry> monomial_span_certify(const RootReducedSpec& s) {
  s.validate();
  constexpr double tol = 1e-12;
  std::vector<Cplx> qs{s.q()};
  for (int N : {3, 4, 5}) {
    if (qs.size() == 3) break;
    const Cplx candidate = primitive_root(N, 1);
    if (std::abs(candidate - qs.front()) > 1e-9) qs.push_back(candidate);
  }
  const int d = s.m + s.n;
  // Structural support from a generic evaluation.
  const RMatrix generic = slmn_reduced_weights(s.m, s.n, qs[1], Cplx(0.37, 0.81), Cplx(1.2, -0.4));
  std::vector<SpanEntry> table;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          if (generic(i, j, k, l) == Cplx(0.0)) continue;
          const EntryFunction f = [&, i, j, k, l](Cplx q, Cplx x, Cplx y) {
            return slmn_reduced_weights(s.m, s.n, q, x, y)(i, j, k, l);
          };
          SpanEntry e{{i, j, k, l}, fit_monomial_span(f, qs)};
          if (e.fit.fit_residual > tol || e.fit.integrality_distance > tol) throw SpanViolation(e.index, e.fit);
          table.push_back(e);
        }
  return table;
}

}  // namespace ybkit

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ybkit {

using Cplx = std::complex<double>;

/// Dense vertex-weight tensor R(i,j -> k,l) on a two-leg tensor product.
///
/// Storage is the operator form: a (d1*d2) x (d1*d2) matrix whose rows are
/// the outgoing pair index k*d2+l and whose columns are the incoming pair
/// index i*d2+j. For 2x2 legs this is exactly the printed 4x4 layout with
/// basis order 00, 01, 10, 11.
template <typename Scalar>
class BasicRMatrix {
 public:
  using Operator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

  BasicRMatrix() = default;

  BasicRMatrix(Eigen::Index dim_left, Eigen::Index dim_right)
      : dim_left_(dim_left), dim_right_(dim_right) {
    if (dim_left <= 0 || dim_right <= 0) {
      throw std::invalid_argument("RMatrix: leg dimensions must be positive");
    }
    op_ = Operator::Zero(dim_left * dim_right, dim_left * dim_right);
  }

  BasicRMatrix(Eigen::Index dim_left, Eigen::Index dim_right, Operator op)
      : dim_left_(dim_left), dim_right_(dim_right), op_(std::move(op)) {
    if (dim_left <= 0 || dim_right <= 0) {
      throw std::invalid_argument("RMatrix: leg dimensions must be positive");
    }
    if (op_.rows() != dim_left * dim_right || op_.cols() != op_.rows()) {
      throw std::invalid_argument("RMatrix: operator shape does not match leg dimensions");
    }
  }

  /// Entry 1 iff (k,l) == (i,j).
  static BasicRMatrix Identity(Eigen::Index dim_left, Eigen::Index dim_right) {
    return BasicRMatrix(dim_left, dim_right,
                        Operator::Identity(dim_left * dim_right, dim_left * dim_right));
  }

  Eigen::Index dim_left() const { return dim_left_; }
  Eigen::Index dim_right() const { return dim_right_; }

  Scalar operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) const {
    return op_(k * dim_right_ + l, i * dim_right_ + j);
  }
  Scalar& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) {
    return op_(k * dim_right_ + l, i * dim_right_ + j);
  }

  const Operator& op() const { return op_; }

  RealScalar max_abs() const {
    return op_.size() == 0 ? RealScalar(0) : op_.cwiseAbs().maxCoeff();
  }

  bool all_finite() const { return op_.allFinite(); }

  Eigen::Index nonzero_count() const {
    return (op_.array() != Scalar(0)).count();
  }

  template <typename Other>
  BasicRMatrix<Other> cast() const {
    return BasicRMatrix<Other>(dim_left_, dim_right_, op_.template cast<Other>());
  }

  friend BasicRMatrix operator*(const Scalar& s, const BasicRMatrix& r) {
    return BasicRMatrix(r.dim_left_, r.dim_right_, s * r.op_);
  }

  bool operator==(const BasicRMatrix& o) const {
    return dim_left_ == o.dim_left_ && dim_right_ == o.dim_right_ && op_ == o.op_;
  }

 private:
  Eigen::Index dim_left_ = 0;
  Eigen::Index dim_right_ = 0;
  Operator op_;
};

using RMatrix = BasicRMatrix<Cplx>;

/// Nonzero-support rules obeyed by the models of this toolkit.
enum class SupportRule {
  Multiset,  ///< entry (i,j,k,l) != 0 implies {i,j} == {k,l}
  ZNCharge,  ///< entry (i,j,k,l) != 0 implies i+j == k+l (mod d)
};

/// Number of entries violating `rule`; zero means the rule holds exactly.
template <typename Scalar>
Eigen::Index support_violations(const BasicRMatrix<Scalar>& r, SupportRule rule) {
  const Eigen::Index d1 = r.dim_left(), d2 = r.dim_right();
  Eigen::Index bad = 0;
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k)
        for (Eigen::Index l = 0; l < d2; ++l) {
          if (r(i, j, k, l) == Scalar(0)) continue;
          bool ok = false;
          if (rule == SupportRule::Multiset) {
            ok = (i == k && j == l) || (i == l && j == k);
          } else {
            ok = d1 == d2 && (i + j) % d1 == (k + l) % d1;
          }
          if (!ok) ++bad;
        }
  return bad;
}

/// Throws std::logic_error if a freshly built matrix is non-finite or breaks
/// its support rule.
template <typename Scalar>
void require_well_formed(const BasicRMatrix<Scalar>& r, SupportRule rule, const char* who) {
  if (!r.all_finite()) {
    throw std::domain_error(std::string(who) + ": non-finite weight");
  }
  if (const auto bad = support_violations(r, rule); bad != 0) {
    throw std::logic_error(std::string(who) + ": " + std::to_string(bad) +
                           " entries violate the support rule");
  }
}

/// Lifts `r` to an operator on a three-fold product with leg dimensions
/// `dims`, acting on the legs (first, second) with first < second.
template <typename Scalar>
typename BasicRMatrix<Scalar>::Operator embed(const BasicRMatrix<Scalar>& r,
                                              const std::array<Eigen::Index, 3>& dims,
                                              int first, int second) {
  using Op = typename BasicRMatrix<Scalar>::Operator;
  const Eigen::Index total = dims[0] * dims[1] * dims[2];
  Op out = Op::Zero(total, total);
  const auto flat = [&](const std::array<Eigen::Index, 3>& s) {
    return (s[0] * dims[1] + s[1]) * dims[2] + s[2];
  };
  std::array<Eigen::Index, 3> s{};
  for (s[0] = 0; s[0] < dims[0]; ++s[0])
    for (s[1] = 0; s[1] < dims[1]; ++s[1])
      for (s[2] = 0; s[2] < dims[2]; ++s[2]) {
        const Eigen::Index col = flat(s);
        for (Eigen::Index k = 0; k < dims[first]; ++k)
          for (Eigen::Index l = 0; l < dims[second]; ++l) {
            const Scalar w = r(s[first], s[second], k, l);
            if (w == Scalar(0)) continue;
            auto t = s;
            t[first] = k;
            t[second] = l;
            out(flat(t), col) += w;
          }
      }
  return out;
}

template <typename Real>
struct YbeResidual {
  Real absolute = 0;  ///< max-abs entry of LHS - RHS
  Real relative = 0;  ///< absolute / max-abs entry of LHS
};

/// Residual of RA_12 RB_13 RC_23 = RC_23 RB_13 RA_12.
///
/// RA acts on legs (1,2), RB on (1,3), RC on (2,3). The relative residual is
/// the scale-free figure of merit.
template <typename Scalar>
YbeResidual<typename BasicRMatrix<Scalar>::RealScalar> ybe_residual(
    const BasicRMatrix<Scalar>& ra, const BasicRMatrix<Scalar>& rb,
    const BasicRMatrix<Scalar>& rc) {
  using Real = typename BasicRMatrix<Scalar>::RealScalar;
  std::ostringstream why;
  if (ra.dim_left() != rb.dim_left()) {
    why << "RA left leg (" << ra.dim_left() << ") != RB left leg (" << rb.dim_left() << ")";
  } else if (ra.dim_right() != rc.dim_left()) {
    why << "RA right leg (" << ra.dim_right() << ") != RC left leg (" << rc.dim_left() << ")";
  } else if (rb.dim_right() != rc.dim_right()) {
    why << "RB right leg (" << rb.dim_right() << ") != RC right leg (" << rc.dim_right() << ")";
  }
  if (!why.str().empty()) {
    throw std::invalid_argument("ybe_residual: dimension mismatch: " + why.str());
  }
  const std::array<Eigen::Index, 3> dims{ra.dim_left(), ra.dim_right(), rb.dim_right()};
  const auto a12 = embed(ra, dims, 0, 1);
  const auto b13 = embed(rb, dims, 0, 2);
  const auto c23 = embed(rc, dims, 1, 2);
  const typename BasicRMatrix<Scalar>::Operator lhs = a12 * b13 * c23;
  const typename BasicRMatrix<Scalar>::Operator rhs = c23 * b13 * a12;
  YbeResidual<Real> res;
  res.absolute = (lhs - rhs).cwiseAbs().maxCoeff();
  const Real scale = lhs.cwiseAbs().maxCoeff();
  res.relative = scale > Real(0) ? res.absolute / scale
                                 : (res.absolute == Real(0) ? Real(0)
                                                            : std::numeric_limits<Real>::infinity());
  return res;
}

/// min_s max|r1 - s r2| with s pinned at the largest-magnitude entry of r2.
template <typename Scalar>
typename BasicRMatrix<Scalar>::RealScalar projective_distance(const BasicRMatrix<Scalar>& r1,
                                                              const BasicRMatrix<Scalar>& r2) {
  using Real = typename BasicRMatrix<Scalar>::RealScalar;
  if (r1.dim_left() != r2.dim_left() || r1.dim_right() != r2.dim_right()) {
    throw std::invalid_argument("projective_distance: dimension mismatch");
  }
  Eigen::Index row = 0, col = 0;
  const Real peak = r2.op().cwiseAbs().maxCoeff(&row, &col);
  if (!(peak > Real(1e-14))) {
    throw std::invalid_argument("projective_distance: reference matrix is numerically zero");
  }
  const Scalar s = r1.op()(row, col) / r2.op()(row, col);
  return (r1.op() - s * r2.op()).cwiseAbs().maxCoeff();
}

/// Largest entrywise |r1 - r2|.
template <typename Scalar>
typename BasicRMatrix<Scalar>::RealScalar max_abs_difference(const BasicRMatrix<Scalar>& r1,
                                                             const BasicRMatrix<Scalar>& r2) {
  if (r1.dim_left() != r2.dim_left() || r1.dim_right() != r2.dim_right()) {
    throw std::invalid_argument("max_abs_difference: dimension mismatch");
  }
  return (r1.op() - r2.op()).cwiseAbs().maxCoeff();
}

}  // namespace ybkit

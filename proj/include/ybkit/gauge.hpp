#pragma once

#include "ybkit/rmatrix.hpp"

namespace ybkit {

/// Diagonal edge transforms on the four legs of a 2x2-leg vertex.
template <typename Scalar>
struct BasicGaugeSandwich {
  using Diagonal = Eigen::Matrix<Scalar, 2, 1>;
  Diagonal pre_left = Diagonal::Ones();
  Diagonal pre_right = Diagonal::Ones();
  Diagonal post_left = Diagonal::Ones();
  Diagonal post_right = Diagonal::Ones();

  static BasicGaugeSandwich Identity() { return {}; }

  /// diag(lambda, 1/lambda)
  static Diagonal split(const Scalar& lambda) { return Diagonal(lambda, Scalar(1) / lambda); }

  bool valid() const {
    const auto nonzero = [](const Diagonal& d) { return (d.array() != Scalar(0)).all() && d.allFinite(); };
    return nonzero(pre_left) && nonzero(pre_right) && nonzero(post_left) && nonzero(post_right);
  }

  BasicGaugeSandwich inverse() const {
    BasicGaugeSandwich g;
    g.pre_left = pre_left.cwiseInverse();
    g.pre_right = pre_right.cwiseInverse();
    g.post_left = post_left.cwiseInverse();
    g.post_right = post_right.cwiseInverse();
    return g;
  }
};

using GaugeSandwich = BasicGaugeSandwich<Cplx>;

/// Entry (i,j,k,l) times post_left[k] post_right[l] pre_left[i] pre_right[j].
template <typename Scalar>
BasicRMatrix<Scalar> apply_gauge(const BasicRMatrix<Scalar>& r, const BasicGaugeSandwich<Scalar>& g) {
  if (r.dim_left() != 2 || r.dim_right() != 2) {
    throw std::invalid_argument("apply_gauge: gauge sandwiches act on 2x2-leg matrices only");
  }
  if (!g.valid()) {
    throw std::invalid_argument("apply_gauge: gauge diagonal has a zero or non-finite value");
  }
  BasicRMatrix<Scalar> out = r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(i, j, k, l) *= g.post_left[k] * g.post_right[l] * g.pre_left[i] * g.pre_right[j];
  return out;
}

}  // namespace ybkit

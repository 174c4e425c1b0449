#pragma once

#include <complex>
#include <stdexcept>

namespace ybkit {

/// (a; q)_n = prod_{k=1..n} (1 - a q^{k-1})
template <typename Scalar>
Scalar pochhammer_std(const Scalar& a, const Scalar& q, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_std: n must be nonnegative");
  Scalar out(1), qk(1);
  for (int k = 1; k <= n; ++k) {
    out *= Scalar(1) - a * qk;
    qk *= q;
  }
  return out;
}

/// [a; q1]_n = prod_{k=1..n} (a^{-1} q1^{k-1} - a q1^{1-k})
///
/// The running index k sits in the exponents; a reading with n in place of
/// k agrees only for n <= 1.
template <typename Scalar>
Scalar pochhammer_bs(const Scalar& a, const Scalar& q1, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_bs: n must be nonnegative");
  if (a == Scalar(0)) throw std::invalid_argument("pochhammer_bs: a must be nonzero");
  if (n > 1 && q1 == Scalar(0)) throw std::invalid_argument("pochhammer_bs: q1 must be nonzero");
  const Scalar ainv = Scalar(1) / a;
  Scalar out(1), up(1), down(1);
  for (int k = 1; k <= n; ++k) {
    out *= ainv * up - a * down;
    up *= q1;
    down /= q1;
  }
  return out;
}

namespace detail {
template <typename Scalar>
Scalar int_pow(Scalar z, int n) {
  Scalar out(1);
  const bool inv = n < 0;
  for (int k = 0; k < (inv ? -n : n); ++k) out *= z;
  return inv ? Scalar(1) / out : out;
}
}  // namespace detail

/// (q)_n = (1 - q^n)/(1 - q). At q == 1 returns the limit n and sets
/// *at_limit.
template <typename Scalar>
Scalar q_integer_std(const Scalar& q, int n, bool* at_limit = nullptr) {
  if (at_limit) *at_limit = false;
  if (q == Scalar(1)) {
    if (at_limit) *at_limit = true;
    return Scalar(n);
  }
  return (Scalar(1) - detail::int_pow(q, n)) / (Scalar(1) - q);
}

/// [q1]_n = (q1^n - q1^{-n})/(q1 - q1^{-1}). At q1 = +-1 returns the limit
/// n q1^{n-1} and sets *at_limit.
template <typename Scalar>
Scalar q_integer_bs(const Scalar& q1, int n, bool* at_limit = nullptr) {
  if (at_limit) *at_limit = false;
  if (q1 == Scalar(0)) throw std::invalid_argument("q_integer_bs: q1 must be nonzero");
  if (q1 == Scalar(1) || q1 == Scalar(-1)) {
    if (at_limit) *at_limit = true;
    return Scalar(n) * detail::int_pow(q1, n - 1);
  }
  return (detail::int_pow(q1, n) - detail::int_pow(q1, -n)) / (q1 - Scalar(1) / q1);
}

}  // namespace ybkit

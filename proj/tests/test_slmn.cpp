#include <numbers>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "ybkit/sampling.hpp"
#include "ybkit/six_vertex.hpp"
#include "ybkit/slmn.hpp"

using namespace ybkit;

namespace {

SlmnParams random_params(Sampler& s, int m, int n) {
  SlmnParams p = SlmnParams::Untwisted(m, n, Cplx(s.uniform(0.1, 0.8), s.uniform(-0.5, 0.5)));
  const int d = m + n;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      p.twist(a, b) = s.annulus(0.5, 2.0);
      p.twist(b, a) = 1.0 / p.twist(a, b);
    }
    for (int k = 0; k < 2; ++k) {
      p.gauge_p(a, k) = s.annulus(0.5, 2.0);
      p.gauge_q(a, k) = s.annulus(0.5, 2.0);
    }
  }
  p.normalization = s.annulus(0.5, 2.0);
  return p;
}

// w^{cd}_{ab} straight from the additive formulas, indexed (lower a, b; upper c, d).
Cplx additive_weight(const SlmnParams& p, Cplx p0, Cplx q0, int a, int b, int c, int d) {
  const Cplx delta = p0 - q0;
  const auto P = [&](int s, int i) { return p.gauge_p(i, s); };
  const auto Q = [&](int s, int i) { return p.gauge_q(i, s); };
  if (a == b && c == a && d == a)
    return p.normalization * std::sinh(p.eta + double(p.grading(a)) * delta) * P(0, a) * Q(1, a) / (Q(0, a) * P(1, a));
  // w^{ab}_{ba}: lower (b, a), upper (a, b)
  if (a != b && c == b && d == a) {
    const int A = b, B = a;
    return p.normalization * p.twist(A, B) * std::sinh(delta) * P(0, A) * Q(1, B) / (Q(0, B) * P(1, A));
  }
  // w^{ba}_{ba}: lower (b, a), upper (b, a)
  if (a != b && c == a && d == b) {
    const int A = b, B = a;
    const double sgn = A > B ? 1.0 : -1.0;
    return p.normalization * std::exp(delta * sgn) * std::sinh(p.eta) * P(0, B) * Q(1, A) / (Q(0, B) * P(1, A));
  }
  return 0.0;
}

const std::pair<int, int> kModels[] = {{2, 0}, {0, 2}, {1, 1}, {2, 1}};

}  // namespace

TEST_CASE("additive weights match the defining formulas") {
  Sampler s(11);
  for (auto [m, n] : kModels) {
    const SlmnParams p = random_params(s, m, n);
    const Cplx p0(0.3, 0.1), q0(-0.2, 0.25);
    const RMatrix r = build_slmn_additive(p, p0, q0);
    const int d = m + n;
    // stored as R(a, b -> d, c)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e)
            CHECK(std::abs(r(a, b, e, c) - additive_weight(p, p0, q0, a, b, c, e)) < 1e-14);
  }
}

TEST_CASE("additive special values") {
  SlmnParams p = SlmnParams::Untwisted(1, 1, 0.3);
  const RMatrix r = build_slmn_additive(p, 0.2, 0.0);
  CHECK(std::abs(r(0, 0, 0, 0) - std::sinh(0.5)) < 1e-15);
  CHECK(std::abs(r(1, 1, 1, 1) - std::sinh(0.1)) < 1e-15);

  const RMatrix same = build_slmn_additive(SlmnParams::Untwisted(2, 1, 0.4), 0.7, 0.7);
  for (int a = 0; a < 3; ++a) {
    CHECK(std::abs(same(a, a, a, a) - std::sinh(0.4)) < 1e-15);
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(same(a, b, a, b) == Cplx(0.0));
  }
  const RMatrix free = build_slmn_additive(SlmnParams::Untwisted(1, 1, 0.0), 0.3, 0.1);
  CHECK(free(0, 1, 1, 0) == Cplx(0.0));
  CHECK(free(1, 0, 0, 1) == Cplx(0.0));
}

TEST_CASE("parameter validation") {
  SlmnParams p = SlmnParams::Untwisted(2, 1, 0.3);
  p.twist(0, 1) = 2.0;
  CHECK_THROWS_WITH_AS(build_slmn_additive(p, 0.1, 0.0), doctest::Contains("G(0,1)"), std::invalid_argument);
  p = SlmnParams::Untwisted(1, 0, 0.3);
  CHECK_THROWS_AS(build_slmn_additive(p, 0.1, 0.0), std::invalid_argument);
  p = SlmnParams::Untwisted(1, 1, 0.3);
  p.gauge_q(1, 1) = 0.0;
  CHECK_THROWS_AS(build_slmn_multiplicative(p, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_slmn_root_of_unity({1, 1, 4, 2, 1.0, 2.0}), doctest::Contains("gcd"),
                       std::invalid_argument);
}

TEST_CASE("multiplicative form") {
  SUBCASE("agrees with the additive form") {
    SlmnParams p = SlmnParams::Untwisted(1, 1, 0.3);
    const RMatrix add = build_slmn_additive(p, 0.1, 0.0);
    const RMatrix mult = build_slmn_multiplicative(p, std::exp(0.0), std::exp(0.2));
    CHECK(max_abs_difference(add, mult) / add.max_abs() < 1e-12);

    Sampler s(5);
    for (auto [m, n] : kModels) {
      const SlmnParams q = random_params(s, m, n);
      const Cplx p0(0.2, -0.3), q0(-0.1, 0.35);
      const RMatrix a = build_slmn_additive(q, p0, q0);
      const RMatrix b = build_slmn_multiplicative(q, std::exp(2.0 * q0), std::exp(2.0 * p0));
      CHECK(max_abs_difference(a, b) / a.max_abs() < 1e-12);
    }
  }
  SUBCASE("printed entries") {
    const SlmnParams p = SlmnParams::Untwisted(1, 1, Cplx(0.2, 0.3));
    const Cplx x(0.7, 0.2), y(1.1, -0.5), qi = std::exp(-2.0 * p.eta);
    const Cplx Np = multiplicative_normalization(p, x, y);
    const RMatrix r = build_slmn_multiplicative(p, x, y);
    CHECK(std::abs(r(0, 0, 0, 0) - Np * (1.0 - qi * x / y)) < 1e-14);
    CHECK(std::abs(r(1, 1, 1, 1) - Np * (x / y - qi)) < 1e-14);
    const RMatrix eq = build_slmn_multiplicative(p, x, x);
    CHECK(eq(0, 1, 0, 1) == Cplx(0.0));
    CHECK(eq(1, 0, 1, 0) == Cplx(0.0));
  }
}

TEST_CASE("root-of-unity form") {
  SUBCASE("(2,0) is the BBP matrix") {
    for (int N = 2; N <= 7; ++N)
      for (int j = 1; j < N; ++j) {
        if (std::gcd(j, N) != 1) continue;
        const Cplx x(1.3, 0.4), y(0.6, -0.9);
        const RMatrix r = build_slmn_root_of_unity({2, 0, N, j, x, y});
        const RMatrix bbp = build_six_vertex({SixVertexGauge::BBP, RootOfUnitySpec{N, j}.q(), x, y, 1.0});
        CHECK(max_abs_difference(r, bbp) < 1e-14);
      }
  }
  SUBCASE("x = y kills exchange entries only") {
    const RMatrix r = build_slmn_root_of_unity({2, 1, 5, 2, 1.4, 1.4});
    const Cplx qi = 1.0 / RootOfUnitySpec{5, 2}.q();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        CHECK(r(b, a, b, a) == Cplx(0.0));
        CHECK(std::abs(r(b, a, a, b) - (1.0 - qi)) < 1e-15);
      }
  }
  SUBCASE("specialises the gauged multiplicative form") {
    // unit gauges, N' = 1 and G_ab = q^{sign(a-b)/2}
    for (auto [m, n] : kModels) {
      const int N = 5, j = 2;
      const Cplx q = RootOfUnitySpec{N, j}.q(), x(0.9, 0.3), y(1.2, -0.2);
      SlmnParams p = SlmnParams::Untwisted(m, n, std::log(q) / 2.0);
      p.twist = root_reduced_twist(m, n, q);
      const RMatrix mult = build_slmn_multiplicative(p, x, y);
      const RMatrix root = build_slmn_root_of_unity({m, n, N, j, x, y});
      CHECK(projective_distance(mult, root) < 1e-14);
    }
  }
  SUBCASE("even N Yang-Baxter") {
    const Cplx X[3] = {Cplx(1.2, 0.3), Cplx(0.7, -0.4), Cplx(0.9, 0.8)};
    const auto R = [&](int a, int b) { return build_slmn_root_of_unity({1, 1, 4, 1, X[a], X[b]}); };
    CHECK(oracle::ybe_residual(R(0, 1), R(0, 2), R(1, 2)) < 1e-10);
  }
}

TEST_CASE("Yang-Baxter with twists and gauges") {
  Sampler s(99);
  for (auto [m, n] : kModels) {
    const SlmnParams base = random_params(s, m, n);
    SlmnParams p[3] = {base, base, base};
    Cplx rap[3];
    for (int i = 0; i < 3; ++i) {
      p[i].gauge_p = random_params(s, m, n).gauge_p;
      rap[i] = {s.uniform(-0.5, 0.5), s.uniform(-0.5, 0.5)};
    }
    const auto R = [&](int i, int j) {
      SlmnParams q = base;
      q.gauge_p = p[i].gauge_p;
      q.gauge_q = p[j].gauge_p;
      return build_slmn_additive(q, rap[i], rap[j]);
    };
    CHECK(oracle::ybe_residual(R(0, 1), R(0, 2), R(1, 2)) < 1e-10);
    // The gauged weights single out the argument order.
    CHECK(oracle::ybe_residual(R(1, 0), R(2, 0), R(2, 1)) > 1e-6);
  }
}

TEST_CASE("grading swap") {
  // (n,m) with reversed states, p0 - q0 negated and twist G'(a',b') = -G(a,b)
  // reproduces the (m,n) matrix.
  Sampler s(3);
  for (auto [m, n] : kModels) {
    const int d = m + n;
    SlmnParams p = SlmnParams::Untwisted(m, n, Cplx(0.35, 0.1));
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        p.twist(a, b) = s.annulus(0.5, 2.0);
        p.twist(b, a) = 1.0 / p.twist(a, b);
      }
    SlmnParams swapped = SlmnParams::Untwisted(n, m, p.eta);
    const auto rev = [d](int a) { return d - 1 - a; };
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (a != b) swapped.twist(rev(a), rev(b)) = -p.twist(a, b);
    const Cplx p0(0.25, 0.1), q0(-0.15, 0.05);
    const RMatrix r = build_slmn_additive(p, p0, q0);
    const RMatrix t = build_slmn_additive(swapped, q0, p0);
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) worst = std::max(worst, std::abs(r(i, j, k, l) - t(rev(i), rev(j), rev(k), rev(l))));
    CHECK(worst < 1e-14);
  }
}

TEST_CASE("monomial span") {
  SUBCASE("coefficients of the printed entries") {
    const auto table = monomial_span_certify({2, 1, 4, 1, 1.0, 1.0});
    CHECK(table.size() == 3 + 2 * 6);
    for (const auto& e : table) {
      const auto [i, j, k, l] = e.index;
      std::array<double, 4> expect{};
      if (i == j) expect = i < 2 ? std::array<double, 4>{1, 0, 0, -1} : std::array<double, 4>{0, -1, 1, 0};
      else if (k == i) expect = j > i ? std::array<double, 4>{1, 0, -1, 0} : std::array<double, 4>{0, 1, 0, -1};
      else expect = j < i ? std::array<double, 4>{0, 0, 1, -1} : std::array<double, 4>{1, -1, 0, 0};
      for (int c = 0; c < 4; ++c) CHECK(std::abs(e.fit.coefficients[c] - expect[c]) < 1e-12);
    }
  }
  SUBCASE("every model and N") {
    for (auto [m, n] : kModels)
      for (int N = 2; N <= 7; ++N) CHECK_NOTHROW(monomial_span_certify({m, n, N, 1, 1.0, 1.0}));
  }
  SUBCASE("negative control") {
    const std::vector<Cplx> qs{oracle::omega(7), oracle::omega(3), oracle::omega(4)};
    const SpanFit fit = fit_monomial_span([](Cplx q, Cplx x, Cplx y) { return std::sqrt(x / y) * (1.0 - 1.0 / q); }, qs);
    CHECK(fit.fit_residual > 1e-2);
  }
  SUBCASE("fit needs three q values") {
    const std::vector<Cplx> qs{oracle::omega(3), oracle::omega(4)};
    CHECK_THROWS_AS(fit_monomial_span([](Cplx, Cplx, Cplx) { return Cplx(1.0); }, qs), std::invalid_argument);
  }
}

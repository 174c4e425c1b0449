#include "ybkit/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ybkit/chiral_potts.hpp"
#include "ybkit/gauge.hpp"
#include "ybkit/q_series.hpp"
#include "ybkit/sampling.hpp"
#include "ybkit/slmn.hpp"

namespace ybkit {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Real = long double;  // chiral Potts working precision

std::string str(int v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks the worst residual over a sample loop; NaN poisons the result.
struct Worst {
  double value = 0.0;
  void add(double r) {
    if (std::isnan(r) || std::isnan(value)) {
      value = std::numeric_limits<double>::quiet_NaN();
    } else {
      value = std::max(value, r);
    }
  }
};

int random_coprime(Sampler& s, int N) {
  std::vector<int> js;
  for (int j = 1; j < N; ++j)
    if (std::gcd(j, N) == 1) js.push_back(j);
  return js[s.integer(int(js.size()))];
}

// Multiplicative rapidity in the principal-branch sector: modulus
// log-uniform in [0.5, 2], phase uniform in (-pi/2, pi/2), so ratio square
// roots split as x^{1/2} / y^{1/2}.
Cplx sector_rapidity(Sampler& s) {
  const double rho = std::exp(s.uniform(std::log(0.5), std::log(2.0)));
  return std::polar(rho, s.uniform(-0.5, 0.5) * std::numbers::pi);
}

// Yang-Baxter triple from rapidity indices: Forward builds
// R(0,1), R(0,2), R(1,2); Reversed builds R(1,0), R(2,0), R(2,1).
template <typename Build>
auto ybe_triple(YbeConvention conv, Build&& build) {
  if (conv == YbeConvention::Forward) return ybe_residual(build(0, 1), build(0, 2), build(1, 2));
  return ybe_residual(build(1, 0), build(2, 0), build(2, 1));
}

std::string convention_name(YbeConvention c) { return c == YbeConvention::Forward ? "forward" : "reversed"; }

std::string model_tag(int m, int n) { return "m" + str(m) + "n" + str(n); }

const std::array<std::pair<int, int>, 4> kSlmnModels{{{2, 0}, {0, 2}, {1, 1}, {2, 1}}};

SlmnParams random_slmn(Sampler& s, int m, int n) {
  SlmnParams p = SlmnParams::Untwisted(m, n, Cplx(s.uniform(0.1, 0.8), s.uniform(-0.5, 0.5)));
  const int d = m + n;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      p.twist(a, b) = s.annulus(0.5, 2.0);
      p.twist(b, a) = 1.0 / p.twist(a, b);
    }
  p.normalization = s.annulus(0.5, 2.0);
  return p;
}

Eigen::MatrixX2cd random_gauge(Sampler& s, int d) {
  Eigen::MatrixX2cd g(d, 2);
  for (int a = 0; a < d; ++a)
    for (int k = 0; k < 2; ++k) g(a, k) = s.annulus(0.5, 2.0);
  return g;
}

Cplx random_additive(Sampler& s) { return {s.uniform(-0.5, 0.5), s.uniform(-0.5, 0.5)}; }

template <typename T>
double to_double(T v) {
  return static_cast<double>(v);
}

// Draws a double line pair, retrying on the measure-zero pole set.
struct CPSample {
  BasicModulus<Real> mod;
  std::vector<BasicCPPoint<Real>> points;
};

CPSample draw_points(Sampler& s, int N, int count) {
  CPSample out{s.modulus<Real>(), {}};
  for (int k = 0; k < count; ++k) out.points.push_back(s.curve_point<Real>(N, out.mod));
  return out;
}

}  // namespace

double SuiteConfig::tolerance(const std::string& check, double fallback) const {
  std::size_t best = 0;
  double tol = fallback;
  bool found = false;
  for (const auto& [key, value] : tolerances) {
    if (check.compare(0, key.size(), key) == 0 && (!found || key.size() > best)) {
      best = key.size();
      tol = value;
      found = true;
    }
  }
  return tol;
}

int SuiteConfig::samples(const std::string& group, int fallback) const {
  const auto it = sample_counts.find(group);
  return it == sample_counts.end() ? fallback : it->second;
}

void SuiteConfig::validate() const {
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw std::invalid_argument("config: tolerance for '" + k + "' must be positive");
  for (const auto& [k, v] : sample_counts)
    if (v < 1) throw std::invalid_argument("config: sample count for '" + k + "' must be at least 1");
  for (int N : n_list)
    if (N < 2) throw std::invalid_argument("config: N values must be at least 2");
}

SuiteConfig config_from_json(const nlohmann::json& j) {
  SuiteConfig c;
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("n_list")) c.n_list = j.at("n_list").get<std::vector<int>>();
  if (j.contains("tolerances")) c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
  if (j.contains("sample_counts")) c.sample_counts = j.at("sample_counts").get<std::map<std::string, int>>();
  if (j.contains("ybe_convention")) {
    const auto v = j.at("ybe_convention").get<std::string>();
    if (v == "forward") c.ybe_convention = YbeConvention::Forward;
    else if (v == "reversed") c.ybe_convention = YbeConvention::Reversed;
    else throw std::invalid_argument("config: ybe_convention must be 'forward' or 'reversed'");
  }
  c.validate();
  return c;
}

nlohmann::ordered_json config_to_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.seed;
  j["n_list"] = c.n_list;
  j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  j["sample_counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.sample_counts) j["sample_counts"][k] = v;
  j["ybe_convention"] = convention_name(c.ybe_convention);
  return j;
}

// ---------------------------------------------------------------------------
// 1. six-vertex Yang-Baxter equation, all gauges, generic and root-of-unity q

std::vector<CheckReport> check_six_vertex_ybe(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  const int count = c.samples("six_vertex_ybe", 100);
  for (SixVertexGauge gauge :
       {SixVertexGauge::Symmetric, SixVertexGauge::BazhanovStroganov, SixVertexGauge::BBP}) {
    for (int N = 1; N <= 7; ++N) {  // N == 1 stands for generic q
      const std::string qclass = N == 1 ? "generic" : "root_N" + str(N);
      const std::string name = "ac1.six_vertex_ybe." + std::string(to_string(gauge)) + "." + qclass;
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const Cplx q = N == 1 ? s.annulus(0.5, 2.0) : RootOfUnitySpec{N, random_coprime(s, N)}.q();
        const Cplx u[3] = {sector_rapidity(s), sector_rapidity(s), sector_rapidity(s)};
        worst.add(ybe_triple(c.ybe_convention, [&](int i, int j) {
                    return build_six_vertex({gauge, q, u[i], u[j], 1.0});
                  }).relative);
      }
      out.emplace_back(name, Params{{"gauge", std::string(to_string(gauge))}, {"q", qclass},
                                    {"samples", str(count)}, {"convention", convention_name(c.ybe_convention)},
                                    {"seed", str(c.seed)}},
                       worst.value, c.tolerance(name, 1e-10));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2. staggered and uniform gauge bridges

std::vector<CheckReport> check_gauge_bridges(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  const int count = c.samples("bridges", 20);
  for (int N : {4, 5}) {
    {
      const std::string name = "ac2.staggered_bridge.N" + str(N);
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const Cplx q = RootOfUnitySpec{N, random_coprime(s, N)}.q();
        const Cplx x = sector_rapidity(s), y = sector_rapidity(s);
        const RMatrix bs = build_six_vertex({SixVertexGauge::BazhanovStroganov, q, x, y, 1.0});
        const RMatrix bbp = build_six_vertex({SixVertexGauge::BBP, q, x, y, 1.0});
        worst.add(projective_distance(apply_gauge(bs, staggered_connect(StaggeredDirection::BSToBBP, q)), bbp));
      }
      out.emplace_back(name, Params{{"lambda", "q^(1/8)"}, {"N", str(N)}, {"samples", str(count)}, {"seed", str(c.seed)}},
                       worst.value, c.tolerance(name, 1e-12));
    }
    {
      const std::string name = "ac2.uniform_bridge.N" + str(N);
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const Cplx q = RootOfUnitySpec{N, random_coprime(s, N)}.q();
        const Cplx x = sector_rapidity(s), y = sector_rapidity(s);
        const RMatrix sym = build_six_vertex({SixVertexGauge::Symmetric, q, x, y, 1.0});
        const RMatrix bs = build_six_vertex({SixVertexGauge::BazhanovStroganov, q, x, y, 1.0});
        worst.add(projective_distance(apply_gauge(sym, uniform_connect(UniformDirection::SymToBS, x, y)), bs));
      }
      out.emplace_back(name, Params{{"lambda", "(x/y)^(1/8)"}, {"N", str(N)}, {"samples", str(count)}, {"seed", str(c.seed)}},
                       worst.value, c.tolerance(name, 1e-12));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. sl(m|n) Yang-Baxter equation in all three forms, additive/multiplicative agreement

std::vector<CheckReport> check_slmn(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  const int count = c.samples("slmn_ybe", 50);
  for (const auto& [m, n] : kSlmnModels) {
    const std::string tag = model_tag(m, n);
    const int d = m + n;
    const Params base{{"m", str(m)}, {"n", str(n)}, {"samples", str(count)},
                      {"convention", convention_name(c.ybe_convention)}, {"seed", str(c.seed)}};
    {
      const std::string name = "ac3.slmn_ybe.additive." + tag;
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const SlmnParams model = random_slmn(s, m, n);
        Eigen::MatrixX2cd gauges[3];
        Cplx rap[3];
        for (int i = 0; i < 3; ++i) {
          gauges[i] = random_gauge(s, d);
          rap[i] = random_additive(s);
        }
        worst.add(ybe_triple(c.ybe_convention, [&](int i, int j) {
                    SlmnParams p = model;
                    p.gauge_p = gauges[i];
                    p.gauge_q = gauges[j];
                    return build_slmn_additive(p, rap[i], rap[j]);
                  }).relative);
      }
      out.emplace_back(name, base, worst.value, c.tolerance(name, 1e-10));
    }
    {
      // Weight w(p_i, p_j) in multiplicative variables: x = e^{2 p_j}, y = e^{2 p_i}.
      const std::string name = "ac3.slmn_ybe.multiplicative." + tag;
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const SlmnParams model = random_slmn(s, m, n);
        Eigen::MatrixX2cd gauges[3];
        Cplx X[3];
        for (int i = 0; i < 3; ++i) {
          gauges[i] = random_gauge(s, d);
          X[i] = std::exp(2.0 * random_additive(s));
        }
        worst.add(ybe_triple(c.ybe_convention, [&](int i, int j) {
                    SlmnParams p = model;
                    p.gauge_p = gauges[i];
                    p.gauge_q = gauges[j];
                    return build_slmn_multiplicative(p, X[j], X[i]);
                  }).relative);
      }
      out.emplace_back(name, base, worst.value, c.tolerance(name, 1e-10));
    }
    for (int N = 2; N <= 6; ++N) {
      const std::string name = "ac3.slmn_ybe.root_of_unity." + tag + ".N" + str(N);
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        const int j = random_coprime(s, N);
        const Cplx X[3] = {sector_rapidity(s), sector_rapidity(s), sector_rapidity(s)};
        worst.add(ybe_triple(c.ybe_convention, [&](int a, int b) {
                    return build_slmn_root_of_unity({m, n, N, j, X[a], X[b]});
                  }).relative);
      }
      Params p = base;
      p.emplace_back("N", str(N));
      out.emplace_back(name, p, worst.value, c.tolerance(name, 1e-10));
    }
    {
      const std::string name = "ac3.slmn_additive_multiplicative." + tag;
      Sampler s(c.seed, name);
      Worst worst;
      for (int k = 0; k < count; ++k) {
        SlmnParams p = random_slmn(s, m, n);
        p.gauge_p = random_gauge(s, d);
        p.gauge_q = random_gauge(s, d);
        const Cplx p0 = random_additive(s), q0 = random_additive(s);
        const RMatrix add = build_slmn_additive(p, p0, q0);
        const RMatrix mult = build_slmn_multiplicative(p, std::exp(2.0 * q0), std::exp(2.0 * p0));
        worst.add(max_abs_difference(add, mult) / add.max_abs());
      }
      out.emplace_back(name, Params{{"m", str(m)}, {"n", str(n)}, {"samples", str(count)}, {"seed", str(c.seed)}},
                       worst.value, c.tolerance(name, 1e-12));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4. monomial span of the reduced weights, negative control, (2,0) = BBP

std::vector<CheckReport> check_monomial_span(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  for (const auto& [m, n] : kSlmnModels) {
    for (int N = 2; N <= 6; ++N) {
      const std::string name = "ac4.monomial_span." + model_tag(m, n) + ".N" + str(N);
      double residual = 0.0;
      std::size_t entries = 0;
      try {
        const auto table = monomial_span_certify({m, n, N, 1, Cplx(1.0), Cplx(1.0)});
        entries = table.size();
        for (const auto& e : table)
          residual = std::max({residual, e.fit.fit_residual, e.fit.integrality_distance});
      } catch (const SpanViolation& v) {
        residual = std::max(v.fit.fit_residual, v.fit.integrality_distance);
      }
      out.emplace_back(name, Params{{"m", str(m)}, {"n", str(n)}, {"N", str(N)}, {"entries", std::to_string(entries)}},
                       residual, c.tolerance(name, 1e-12));
    }
  }
  {
    const std::string name = "ac4.span_negative_control";
    const std::vector<Cplx> qs{RootOfUnitySpec{5, 1}.q(), RootOfUnitySpec{3, 1}.q(), RootOfUnitySpec{4, 1}.q()};
    const SpanFit fit = fit_monomial_span(
        [](Cplx q, Cplx x, Cplx y) { return std::sqrt(x / y) * (1.0 - 1.0 / q); }, qs);
    out.push_back(make_exceeds_report(name, {{"entry", "symmetric-gauge c-entry (x/y)^(1/2)(1-1/q)"}},
                                      fit.fit_residual, 1e-2));
  }
  {
    const std::string name = "ac4.bbp_reduction";
    Sampler s(c.seed, name);
    Worst worst;
    for (int N = 2; N <= 7; ++N)
      for (int k = 0; k < 10; ++k) {
        const int j = random_coprime(s, N);
        const Cplx x = sector_rapidity(s), y = sector_rapidity(s);
        const RMatrix reduced = build_slmn_root_of_unity({2, 0, N, j, x, y});
        const RMatrix bbp = build_six_vertex({SixVertexGauge::BBP, RootOfUnitySpec{N, j}.q(), x, y, 1.0});
        worst.add(max_abs_difference(reduced, bbp));
      }
    out.emplace_back(name, Params{{"N", "2..7"}, {"samples_per_N", "10"}, {"seed", str(c.seed)}}, worst.value,
                     c.tolerance(name, 1e-14));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 5. chiral Potts weights: curve, coinciding rapidities, closure, star-triangle

std::vector<CheckReport> check_chiral_potts(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  const int closure_pairs = c.samples("cyclic_closure", 50);
  const int triples = c.samples("star_triangle", 10);
  for (int N : c.n_list) {
    const std::string tag = "N" + str(N);
    Worst curve, coinciding, closure, star;
    int redrawn = 0;
    {
      Sampler s(c.seed, "ac5.cyclic_closure." + tag);
      for (int k = 0; k < closure_pairs; ++k) {
        const auto pts = draw_points(s, N, 2);
        for (const auto& p : pts.points) curve.add(to_double(p.curve_residual()));
        closure.add(to_double(cyclic_closure(pts.points[0], pts.points[1])));
        const auto same = cp_weight_tables(pts.points[0], pts.points[0]);
        for (int n = 0; n < N; ++n) {
          coinciding.add(to_double(std::abs(same.W(n) - Real(1))));
          coinciding.add(to_double(std::abs(same.Wb(n) - Real(n == 0 ? 1 : 0))));
        }
      }
    }
    {
      Sampler s(c.seed, "ac5.star_triangle." + tag);
      for (int k = 0; k < triples; ++k) {
        auto pts = draw_points(s, N, 3);
        while (pole_margin<Real>(pts.points) < Real(kStarTrianglePoleMargin)) {
          pts = draw_points(s, N, 3);
          ++redrawn;
        }
        for (const auto& p : pts.points) curve.add(to_double(p.curve_residual()));
        star.add(to_double(star_triangle_residual(pts.points[0], pts.points[1], pts.points[2])));
      }
    }
    const Params base{{"N", str(N)}, {"k_prime", "uniform[0.3,0.9]"}, {"seed", str(c.seed)}};
    auto with = [&](const char* key, int v) {
      Params p = base;
      p.emplace_back(key, str(v));
      return p;
    };
    out.emplace_back("ac5.curve_residual." + tag, with("points", 2 * closure_pairs + 3 * triples), curve.value,
                     c.tolerance("ac5.curve_residual." + tag, 1e-12));
    out.emplace_back("ac5.coinciding_rapidities." + tag, with("pairs", closure_pairs), coinciding.value,
                     c.tolerance("ac5.coinciding_rapidities." + tag, 1e-14));
    out.emplace_back("ac5.cyclic_closure." + tag, with("pairs", closure_pairs), closure.value,
                     c.tolerance("ac5.cyclic_closure." + tag, 1e-10));
    Params star_params = with("triples", triples);
    star_params.emplace_back("pole_margin", "1e-3");
    star_params.emplace_back("redrawn", str(redrawn));
    out.emplace_back("ac5.star_triangle." + tag, star_params, star.value,
                     c.tolerance("ac5.star_triangle." + tag, 1e-9));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. composed four-weight matrix: charge rule, translation invariance, uniform YBE

std::vector<CheckReport> check_composed(const SuiteConfig& c, std::vector<Observation>* observations) {
  std::vector<CheckReport> out;
  const int count = c.samples("uniform_ybe", 5);
  Arrangement swapped = kStarArrangement;
  swapped[0].kind = WeightKind::Wbar;
  for (int N : {2, 3}) {
    const std::string tag = "N" + str(N);
    Sampler s(c.seed, "ac6.composed." + tag);
    Worst charge, translation, ybe, diamond_charge, diamond_translation, diamond_ybe;
    double control = kInf;
    for (int k = 0; k < count; ++k) {
      const auto pts = draw_points(s, N, 6);
      const BasicDoubleLine<Real> lines[3] = {{pts.points[0], pts.points[1]},
                                              {pts.points[2], pts.points[3]},
                                              {pts.points[4], pts.points[5]}};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const auto star = compose_star(lines[i], lines[j]);
          translation.add(to_double(star.translation_defect()));
          charge.add(double(support_violations(wkw_vertex_map(star), SupportRule::ZNCharge)));
          const auto diamond = compose_diamond(lines[i], lines[j]);
          diamond_translation.add(to_double(diamond.translation_defect()));
          diamond_charge.add(double(support_violations(wkw_vertex_map(diamond), SupportRule::ZNCharge)));
        }
      const auto run = [&](Composition kind, const Arrangement& arr) {
        return to_double(ybe_triple(c.ybe_convention, [&](int i, int j) {
                           return wkw_vertex_map(kind == Composition::Star ? compose_star(lines[i], lines[j], arr)
                                                                            : compose_diamond(lines[i], lines[j], arr));
                         }).relative);
      };
      ybe.add(run(Composition::Star, kStarArrangement));
      diamond_ybe.add(run(Composition::Diamond, kDiamondArrangement));
      control = std::min(control, run(Composition::Star, swapped));
    }
    const Params base{{"N", str(N)}, {"samples", str(count)}, {"seed", str(c.seed)}};
    out.emplace_back("ac6.wkw_charge.star." + tag, base, charge.value, 0.0);
    out.emplace_back("ac6.wkw_charge.diamond." + tag, base, diamond_charge.value, 0.0);
    out.emplace_back("ac6.translation_invariance.star." + tag, base, translation.value, 0.0);
    out.emplace_back("ac6.translation_invariance.diamond." + tag, base, diamond_translation.value, 0.0);
    out.emplace_back("ac6.uniform_ybe.star." + tag, base, ybe.value,
                     c.tolerance("ac6.uniform_ybe.star." + tag, 1e-8));
    Params ctl = base;
    ctl.emplace_back("arrangement", "star with corner a weight W -> Wbar");
    out.push_back(make_exceeds_report("ac6.negative_control." + tag, ctl, control, 1e-2));
    if (observations) {
      observations->push_back({"ac6.uniform_ybe.diamond." + tag, format_real(diamond_ybe.value)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. q-series identities

std::vector<CheckReport> check_q_series(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  const int count = c.samples("q_series", 20);
  {
    const std::string name = "ac7.recurrence.pochhammer_std";
    Sampler s(c.seed, name);
    Worst worst;
    for (int k = 0; k < count; ++k) {
      const Cplx a = s.annulus(0.5, 1.5), q = s.annulus(0.7, 1.3);
      Cplx qn(1.0);
      for (int n = 0; n <= 20; ++n) {
        const Cplx next = pochhammer_std(a, q, n + 1);
        worst.add(std::abs(next - pochhammer_std(a, q, n) * (1.0 - a * qn)) / std::abs(next));
        qn *= q;
      }
    }
    out.emplace_back(name, Params{{"n", "0..20"}, {"samples", str(count)}, {"seed", str(c.seed)}}, worst.value,
                     c.tolerance(name, 1e-14));
  }
  {
    const std::string name = "ac7.recurrence.pochhammer_bs";
    Sampler s(c.seed, name);
    Worst worst;
    for (int k = 0; k < count; ++k) {
      const Cplx a = s.annulus(0.5, 1.5), q1 = s.annulus(0.7, 1.3);
      Cplx up(1.0), down(1.0);
      for (int n = 0; n <= 20; ++n) {
        const Cplx next = pochhammer_bs(a, q1, n + 1);
        worst.add(std::abs(next - pochhammer_bs(a, q1, n) * (up / a - a * down)) / std::abs(next));
        up *= q1;
        down /= q1;
      }
    }
    out.emplace_back(name, Params{{"n", "0..20"}, {"samples", str(count)}, {"seed", str(c.seed)}}, worst.value,
                     c.tolerance(name, 1e-14));
  }
  {
    const std::string name = "ac7.root_annihilation";
    Worst worst;
    for (int N = 2; N <= 12; ++N) {
      const Cplx q = RootOfUnitySpec{N, 1}.q();
      worst.add(std::abs(pochhammer_std(q, q, N)));
      worst.add(std::abs(q_integer_std(q, N)));
    }
    out.emplace_back(name, Params{{"N", "2..12"}}, worst.value, c.tolerance(name, 1e-12));
  }
  {
    const std::string name = "ac7.base_limit";
    Worst worst;
    const Cplx base(1.0 + 1e-8);
    for (int n = 1; n <= 10; ++n) {
      worst.add(std::abs(q_integer_std(base, n) - double(n)));
      worst.add(std::abs(q_integer_bs(base, n) - double(n)));
    }
    out.emplace_back(name, Params{{"base", "1+1e-8"}, {"n", "1..10"}}, worst.value, c.tolerance(name, 1e-6));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 8. odd/even dichotomy of q1

std::vector<ParityRow> scan_parity(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("scan_parity: need 2 <= N_min <= N_max");
  std::vector<ParityRow> rows;
  for (int N = n_min; N <= n_max; ++N) {
    const auto r = resolve_q1({N, 1});
    rows.push_back({N, r.q1_values, r.q1_pow_N, r.parity_verdict, r.pow_residual, r.square_residual});
  }
  return rows;
}

std::string format_parity_table(const std::vector<ParityRow>& rows) {
  std::ostringstream os;
  os << "N  parity  q1^N    q1 values\n";
  for (const auto& r : rows) {
    char head[64];
    std::snprintf(head, sizeof head, "%-2d %-7s %+.0f     ", r.N, r.N % 2 ? "odd" : "even",
                  r.verdict == Parity::Odd ? 1.0 : -1.0);
    os << head;
    for (std::size_t k = 0; k < r.q1_values.size(); ++k) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s(%.12f%+.12fi -> %+.3e%+.3ei)", k ? "  " : "", r.q1_values[k].real(),
                    r.q1_values[k].imag(), r.q1_pow_N[k].real(), r.q1_pow_N[k].imag());
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<CheckReport> check_parity(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  for (const auto& r : scan_parity(2, 12)) {
    const bool odd = r.N % 2 == 1;
    const std::string name = std::string("ac8.parity.N") + (r.N < 10 ? "0" : "") + str(r.N);
    const bool verdict_ok = (r.verdict == Parity::Odd) == odd;
    double residual = verdict_ok ? r.pow_residual : kInf;
    if (odd) residual = std::max(residual, r.square_residual);
    out.emplace_back(name,
                     Params{{"N", str(r.N)}, {"expected_q1^N", odd ? "+1" : "-1"},
                            {"roots", std::to_string(r.q1_values.size())}},
                     residual, c.tolerance(name, 1e-12));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<CheckReport> run_groups(const SuiteConfig& c, std::vector<Observation>* obs) {
  std::vector<CheckReport> all;
  const auto append = [&](std::vector<CheckReport> v) {
    for (auto& r : v) all.push_back(std::move(r));
  };
  append(check_six_vertex_ybe(c));
  append(check_gauge_bridges(c));
  append(check_slmn(c));
  append(check_monomial_span(c));
  append(check_chiral_potts(c));
  append(check_composed(c, obs));
  append(check_q_series(c));
  append(check_parity(c));
  return all;
}

std::string serialize(const std::vector<CheckReport>& checks) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : checks) j.push_back(check_to_json(r));
  return j.dump();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport report;
  report.config = config;
  report.checks = run_groups(config, &report.observations);
  const auto again = run_groups(config, nullptr);
  const double determinism = serialize(report.checks) == serialize(again) ? 0.0 : 1.0;
  report.checks.emplace_back("ac9.determinism", Params{{"seed", str(config.seed)}, {"runs", "2"}}, determinism, 0.0);
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  for (const auto& r : report.checks) (r.pass ? report.passed : report.failed)++;
  return report;
}

nlohmann::ordered_json check_to_json(const CheckReport& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = v;
  // Non-finite residuals are not representable in JSON numbers.
  if (std::isfinite(c.residual)) j["residual"] = c.residual;
  else j["residual"] = format_real(c.residual);
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

nlohmann::ordered_json report_to_json(const SuiteReport& r, const std::string& timestamp) {
  nlohmann::ordered_json j;
  j["toolkit_version"] = r.version;
  j["generated_at"] = timestamp;
  j["config"] = config_to_json(r.config);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : r.observations) j["observations"].push_back({{"name", o.name}, {"value", o.value}});
  j["summary"] = {{"passed", r.passed}, {"failed", r.failed}, {"total", r.passed + r.failed}};
  return j;
}

}  // namespace ybkit

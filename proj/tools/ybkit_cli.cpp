// ybkit command-line driver.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ybkit/chiral_potts.hpp"
#include "ybkit/dump.hpp"
#include "ybkit/gauge.hpp"
#include "ybkit/sampling.hpp"
#include "ybkit/six_vertex.hpp"
#include "ybkit/slmn.hpp"
#include "ybkit/suite.hpp"

using namespace ybkit;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "re" or "re,im"
Cplx parse_complex(const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw UsageError("cannot parse complex number '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw UsageError("cannot parse complex number '" + s + "'");
  }
  if (is >> comma) throw UsageError("trailing characters in '" + s + "'");
  return {re, im};
}

// "N,j"
RootOfUnitySpec parse_root(const std::string& s) {
  RootOfUnitySpec r{};
  char comma = 0;
  std::istringstream is(s);
  if (!(is >> r.N >> comma >> r.j) || comma != ',') throw UsageError("--q-root expects N,j, got '" + s + "'");
  r.validate();
  return r;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json complex_json(Cplx z) { return {z.real(), z.imag()}; }

// Applies repeatable "--tolerance prefix=value" overrides; a bare value
// applies to every check.
void apply_tolerances(SuiteConfig& c, const std::vector<std::string>& items) {
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const std::string key = eq == std::string::npos ? "" : item.substr(0, eq);
    const std::string value = eq == std::string::npos ? item : item.substr(eq + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      c.tolerances[key] = v;
    } catch (const std::logic_error&) {
      throw UsageError("bad --tolerance '" + item + "'");
    }
  }
}

BasicDoubleLine<long double> sample_line(Sampler& s, int N, const BasicModulus<long double>& mod) {
  return {s.curve_point<long double>(N, mod), s.curve_point<long double>(N, mod)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter toolkit: build R-matrices and chiral Potts weights, run verification suites."};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  // build ------------------------------------------------------------------
  auto* build = app.add_subcommand("build", "Build a model and write its dump");
  build->require_subcommand(1);
  std::string out;

  std::string gauge = "bbp", q_text, q_root, x_text = "1", y_text = "1", norm_text = "1";
  auto* sv = build->add_subcommand("six-vertex", "Six-vertex R-matrix");
  sv->add_option("--gauge", gauge, "sym, bs or bbp")->capture_default_str();
  auto* sv_q = sv->add_option("--q", q_text, "q as re[,im]");
  sv->add_option("--q-root", q_root, "q = exp(2 pi i j/N), given as N,j")->excludes(sv_q);
  sv->add_option("--x", x_text, "rapidity x as re[,im]")->capture_default_str();
  sv->add_option("--y", y_text, "rapidity y as re[,im]")->capture_default_str();
  sv->add_option("--norm", norm_text, "overall normalization")->capture_default_str();
  sv->add_option("--out", out, "output path ('-' for stdout)");

  int m = 2, n = 0;
  std::string eta_text, p0_text = "0", q0_text = "0";
  auto* sl = build->add_subcommand("slmn", "sl(m|n) R-matrix (root-of-unity or additive form)");
  sl->add_option("--m", m)->capture_default_str();
  sl->add_option("--n", n)->capture_default_str();
  auto* sl_root = sl->add_option("--q-root", q_root, "root-of-unity form with q = exp(2 pi i j/N)");
  sl->add_option("--eta", eta_text, "additive form crossing parameter")->excludes(sl_root);
  sl->add_option("--x", x_text)->capture_default_str();
  sl->add_option("--y", y_text)->capture_default_str();
  sl->add_option("--p0", p0_text, "additive rapidity p0")->capture_default_str();
  sl->add_option("--q0", q0_text, "additive rapidity q0")->capture_default_str();
  sl->add_option("--out", out);

  int cp_n = 3;
  double k_prime = 0.6;
  std::uint64_t seed = SuiteConfig{}.seed;
  auto* cpw = build->add_subcommand("cp-weights", "Chiral Potts weight tables for two sampled curve points");
  cpw->add_option("--n", cp_n, "number of states N")->capture_default_str();
  cpw->add_option("--k-prime", k_prime, "real modulus k'")->capture_default_str();
  cpw->add_option("--seed", seed)->capture_default_str();
  cpw->add_option("--out", out);

  auto* r4 = build->add_subcommand("r4cp", "Star-composed four-weight chiral Potts vertex matrix");
  r4->add_option("--n", cp_n)->capture_default_str();
  r4->add_option("--k-prime", k_prime)->capture_default_str();
  r4->add_option("--seed", seed)->capture_default_str();
  r4->add_option("--out", out);

  // ybe-check --------------------------------------------------------------
  std::vector<std::string> dumps;
  std::vector<std::string> tol_items;
  double tolerance = 1e-10;
  auto* ybe = app.add_subcommand("ybe-check", "Yang-Baxter residual of three dumped matrices A12 B13 C23");
  ybe->add_option("dumps", dumps, "three dump files")->required()->expected(3);
  ybe->add_option("--tolerance", tolerance)->capture_default_str();

  // gauge-check ------------------------------------------------------------
  std::string bridge = "staggered";
  auto* gc = app.add_subcommand("gauge-check", "Projective distance after a gauge bridge");
  gc->add_option("--bridge", bridge, "staggered (B&S -> BBP) or uniform (sym -> B&S)")->capture_default_str();
  gc->add_option("--q-root", q_root)->required();
  gc->add_option("--x", x_text)->capture_default_str();
  gc->add_option("--y", y_text)->capture_default_str();
  gc->add_option("--tolerance", tolerance)->capture_default_str();

  // star-triangle ----------------------------------------------------------
  std::vector<int> n_values;
  int samples = 10;
  auto* st = app.add_subcommand("star-triangle", "Star-triangle residual on seeded curve triples");
  st->add_option("--n", n_values, "N values (repeatable)")->take_all();
  st->add_option("--samples", samples)->capture_default_str();
  st->add_option("--seed", seed)->capture_default_str();
  st->add_option("--tolerance", tolerance)->capture_default_str();

  // suite ------------------------------------------------------------------
  std::string config_path;
  auto* su = app.add_subcommand("suite", "Run every acceptance check and write a JSON report");
  su->add_option("--config", config_path, "JSON suite configuration");
  auto* su_seed = su->add_option("--seed", seed, "overrides the configured seed");
  su->add_option("--n", n_values, "chiral Potts N values (repeatable)")->take_all();
  su->add_option("--tolerance", tol_items, "prefix=value, or a bare value for every check (repeatable)");
  su->add_option("--out", out, "report path ('-' for stdout)");

  // scan-parity ------------------------------------------------------------
  int n_min = 2, n_max = 12;
  auto* sp = app.add_subcommand("scan-parity", "q1^N for N in [min, max]");
  sp->add_option("--min", n_min)->capture_default_str();
  sp->add_option("--max", n_max)->capture_default_str();
  sp->add_option("--out", out, "also write the rows as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sv->parsed()) {
      const auto g = parse_six_vertex_gauge(gauge);
      if (!g) throw UsageError("unknown gauge '" + gauge + "' (expected sym, bs or bbp)");
      SixVertexParams p{*g, Cplx(1.0), parse_complex(x_text), parse_complex(y_text), parse_complex(norm_text)};
      if (!q_root.empty()) p.q = parse_root(q_root).q();
      else if (!q_text.empty()) p.q = parse_complex(q_text);
      else throw UsageError("six-vertex needs --q or --q-root");
      const RMatrix r = build_six_vertex(p);
      nlohmann::ordered_json meta;
      meta["model"] = "six-vertex";
      meta["gauge"] = std::string(to_string(p.gauge));
      meta["q"] = complex_json(p.q);
      meta["x"] = complex_json(p.x);
      meta["y"] = complex_json(p.y);
      meta["normalization"] = complex_json(p.normalization);
      meta["degenerate"] = is_degenerate(p);
      meta["nonzero_entries"] = r.nonzero_count();
      write_text(out, write_matrix_dump(r, meta));
    } else if (sl->parsed()) {
      nlohmann::ordered_json meta;
      meta["model"] = "slmn";
      meta["m"] = m;
      meta["n"] = n;
      RMatrix r(1, 1);
      if (!q_root.empty()) {
        const auto root = parse_root(q_root);
        RootReducedSpec s{m, n, root.N, root.j, parse_complex(x_text), parse_complex(y_text)};
        r = build_slmn_root_of_unity(s);
        meta["form"] = "root_of_unity";
        meta["N"] = root.N;
        meta["j"] = root.j;
        meta["x"] = complex_json(s.x);
        meta["y"] = complex_json(s.y);
      } else {
        if (eta_text.empty()) throw UsageError("slmn needs --q-root or --eta");
        const SlmnParams p = SlmnParams::Untwisted(m, n, parse_complex(eta_text));
        const Cplx p0 = parse_complex(p0_text), q0 = parse_complex(q0_text);
        r = build_slmn_additive(p, p0, q0);
        meta["form"] = "additive";
        meta["eta"] = complex_json(p.eta);
        meta["p0"] = complex_json(p0);
        meta["q0"] = complex_json(q0);
      }
      meta["nonzero_entries"] = r.nonzero_count();
      write_text(out, write_matrix_dump(r, meta));
    } else if (cpw->parsed()) {
      Sampler s(seed, "cp-weights");
      const auto mod = BasicModulus<long double>::FromKPrime(k_prime);
      mod.validate();
      const auto p = s.curve_point<long double>(cp_n, mod);
      const auto q = s.curve_point<long double>(cp_n, mod);
      const auto w = cp_weight_tables(p, q);
      CPWeights wd{w.N, w.W.cast<Cplx>(), w.Wb.cast<Cplx>()};
      write_text(out, write_weight_dump(p.cast<double>(), q.cast<double>(), wd));
    } else if (r4->parsed()) {
      Sampler s(seed, "r4cp");
      const auto mod = BasicModulus<long double>::FromKPrime(k_prime);
      mod.validate();
      const auto P = sample_line(s, cp_n, mod);
      const auto Q = sample_line(s, cp_n, mod);
      const auto V = wkw_vertex_map(compose_star(P, Q));
      nlohmann::ordered_json meta;
      meta["model"] = "r4cp";
      meta["composition"] = "star";
      meta["N"] = cp_n;
      meta["k_prime"] = k_prime;
      meta["seed"] = seed;
      write_text(out, write_matrix_dump(V.cast<Cplx>(), meta));
    } else if (ybe->parsed()) {
      RMatrix r[3] = {RMatrix(1, 1), RMatrix(1, 1), RMatrix(1, 1)};
      for (int k = 0; k < 3; ++k) r[k] = read_matrix_dump(read_text(dumps[k])).matrix;
      const auto res = ybe_residual(r[0], r[1], r[2]);
      std::printf("absolute %.6e  relative %.6e  tolerance %.1e  %s\n", res.absolute, res.relative, tolerance,
                  res.relative <= tolerance ? "PASS" : "FAIL");
      return res.relative <= tolerance ? 0 : kExitFail;
    } else if (gc->parsed()) {
      const Cplx q = parse_root(q_root).q(), x = parse_complex(x_text), y = parse_complex(y_text);
      double dist = 0.0;
      if (bridge == "staggered") {
        const RMatrix bs = build_six_vertex({SixVertexGauge::BazhanovStroganov, q, x, y, 1.0});
        const RMatrix bbp = build_six_vertex({SixVertexGauge::BBP, q, x, y, 1.0});
        dist = projective_distance(apply_gauge(bs, staggered_connect(StaggeredDirection::BSToBBP, q)), bbp);
      } else if (bridge == "uniform") {
        const RMatrix sym = build_six_vertex({SixVertexGauge::Symmetric, q, x, y, 1.0});
        const RMatrix bs = build_six_vertex({SixVertexGauge::BazhanovStroganov, q, x, y, 1.0});
        dist = projective_distance(apply_gauge(sym, uniform_connect(UniformDirection::SymToBS, x, y)), bs);
      } else {
        throw UsageError("unknown bridge '" + bridge + "' (expected staggered or uniform)");
      }
      std::printf("%s bridge: projective distance %.6e  tolerance %.1e  %s\n", bridge.c_str(), dist, tolerance,
                  dist <= tolerance ? "PASS" : "FAIL");
      return dist <= tolerance ? 0 : kExitFail;
    } else if (st->parsed()) {
      if (n_values.empty()) n_values = SuiteConfig{}.n_list;
      bool ok = true;
      for (int N : n_values) {
        if (N < 2) throw UsageError("N must be at least 2");
        Sampler s(seed, "star-triangle.N" + std::to_string(N));
        const auto mod = s.modulus<long double>();
        double worst = 0.0;
        int redrawn = 0;
        for (int k = 0; k < samples; ++k) {
          std::vector<BasicCPPoint<long double>> t;
          for (;;) {
            t = {s.curve_point<long double>(N, mod), s.curve_point<long double>(N, mod),
                 s.curve_point<long double>(N, mod)};
            if (pole_margin<long double>(t) >= kStarTrianglePoleMargin) break;
            ++redrawn;
          }
          worst = std::max(worst, double(star_triangle_residual(t[0], t[1], t[2])));
        }
        std::printf("N=%d  samples %d  redrawn %d  worst residual %.6e  %s\n", N, samples, redrawn, worst,
                    worst <= tolerance ? "PASS" : "FAIL");
        ok = ok && worst <= tolerance;
      }
      return ok ? 0 : kExitFail;
    } else if (su->parsed()) {
      SuiteConfig c;
      if (!config_path.empty()) {
        try {
          c = config_from_json(nlohmann::json::parse(read_text(config_path)));
        } catch (const std::exception& e) {
          throw UsageError("config '" + config_path + "': " + e.what());
        }
      }
      if (su_seed->count()) c.seed = seed;
      if (!n_values.empty()) c.n_list = n_values;
      apply_tolerances(c, tol_items);
      try {
        c.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const SuiteReport report = run_suite(c);
      write_text(out.empty() ? "-" : out, report_to_json(report, utc_timestamp()).dump(2) + "\n");
      if (!out.empty() && out != "-") {
        for (const auto& r : report.checks)
          if (!r.pass) std::fprintf(stderr, "FAIL %s residual %s tolerance %s\n", r.name.c_str(),
                                    format_real(r.residual).c_str(), format_real(r.tolerance).c_str());
        std::fprintf(stderr, "%d passed, %d failed\n", report.passed, report.failed);
      }
      return report.all_passed() ? 0 : kExitFail;
    } else if (sp->parsed()) {
      std::vector<ParityRow> rows;
      try {
        rows = scan_parity(n_min, n_max);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << format_parity_table(rows);
      if (!out.empty()) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          nlohmann::ordered_json row;
          row["N"] = r.N;
          row["verdict"] = r.verdict == Parity::Odd ? 1 : -1;
          row["q1"] = nlohmann::ordered_json::array();
          row["q1_pow_N"] = nlohmann::ordered_json::array();
          for (std::size_t k = 0; k < r.q1_values.size(); ++k) {
            row["q1"].push_back(complex_json(r.q1_values[k]));
            row["q1_pow_N"].push_back(complex_json(r.q1_pow_N[k]));
          }
          row["pow_residual"] = r.pow_residual;
          row["square_residual"] = r.square_residual;
          j.push_back(row);
        }
        write_text(out, j.dump(2) + "\n");
      }
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "ybkit: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "ybkit: invalid parameters: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ybkit: %s\n", e.what());
    return kExitFail;
  }
  return 0;
}

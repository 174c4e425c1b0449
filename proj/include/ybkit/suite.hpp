#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybkit/check_report.hpp"
#include "ybkit/six_vertex.hpp"

namespace ybkit {

inline constexpr const char* kToolkitVersion = "ybkit 1.0.0";

/// Argument order used when assembling Yang-Baxter triples from rapidities
/// u1, u2, u3. Forward: R(u1,u2), R(u1,u3), R(u2,u3). Reversed swaps the
/// two arguments of every factor. Forward is the validated convention: the
/// gauged additive sl(m|n) weights fail under Reversed.
enum class YbeConvention { Forward, Reversed };

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  std::vector<int> n_list{2, 3, 4, 5};  ///< N values for the chiral Potts checks
  std::map<std::string, double> tolerances;   ///< check-name prefix -> tolerance
  std::map<std::string, int> sample_counts;   ///< sample group -> count
  YbeConvention ybe_convention = YbeConvention::Forward;

  /// Tolerance for `check`: the override with the longest key that is a
  /// prefix of the check name, else `fallback`.
  double tolerance(const std::string& check, double fallback) const;
  int samples(const std::string& group, int fallback) const;

  /// Throws std::invalid_argument on nonpositive tolerances or counts.
  void validate() const;
};

SuiteConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const SuiteConfig& c);

/// A measured quantity recorded without a pass/fail verdict.
struct Observation {
  std::string name;
  std::string value;
};

struct SuiteReport {
  std::vector<CheckReport> checks;  ///< sorted by name, stable
  std::vector<Observation> observations;
  int passed = 0;
  int failed = 0;
  SuiteConfig config;
  std::string version = kToolkitVersion;

  bool all_passed() const { return failed == 0; }
};

/// Runs every acceptance check group in deterministic order.
SuiteReport run_suite(const SuiteConfig& config);

/// Individual groups, each tagged with its criterion prefix "acN.".
std::vector<CheckReport> check_six_vertex_ybe(const SuiteConfig& c);
std::vector<CheckReport> check_gauge_bridges(const SuiteConfig& c);
std::vector<CheckReport> check_slmn(const SuiteConfig& c);
std::vector<CheckReport> check_monomial_span(const SuiteConfig& c);
std::vector<CheckReport> check_chiral_potts(const SuiteConfig& c);
std::vector<CheckReport> check_composed(const SuiteConfig& c, std::vector<Observation>* observations = nullptr);
std::vector<CheckReport> check_q_series(const SuiteConfig& c);
std::vector<CheckReport> check_parity(const SuiteConfig& c);

struct ParityRow {
  int N;
  std::vector<Cplx> q1_values;
  std::vector<Cplx> q1_pow_N;
  Parity verdict;
  double pow_residual;
  double square_residual;
};

/// resolve_q1 for N = n_min..n_max with j = 1.
std::vector<ParityRow> scan_parity(int n_min, int n_max);
std::string format_parity_table(const std::vector<ParityRow>& rows);

/// Report document; `timestamp` goes into the "generated_at" field, the
/// only field allowed to differ between runs with identical config.
nlohmann::ordered_json report_to_json(const SuiteReport& r, const std::string& timestamp);
nlohmann::ordered_json check_to_json(const CheckReport& c);

}  // namespace ybkit

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ybkit {

/// Outcome of one numerical certification. `pass` is always derived from
/// residual and tolerance; a NaN residual fails.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  CheckReport() = default;
  CheckReport(std::string name_, std::vector<std::pair<std::string, std::string>> params_,
              double residual_, double tolerance_)
      : name(std::move(name_)), params(std::move(params_)), residual(residual_),
        tolerance(tolerance_), pass(residual_ <= tolerance_) {}
};

/// Negative control: passes when `observed` is at least `threshold`.
/// Recorded as residual = threshold / observed against tolerance 1, with
/// the raw observed value echoed under the "observed" parameter.
CheckReport make_exceeds_report(std::string name,
                                std::vector<std::pair<std::string, std::string>> params,
                                double observed, double threshold);

std::string format_real(double v);
std::string format_complex(std::complex<double> z);

}  // namespace ybkit

#include "ybkit/check_report.hpp"

#include <cstdio>
#include <limits>

namespace ybkit {

CheckReport make_exceeds_report(std::string name,
                                std::vector<std::pair<std::string, std::string>> params,
                                double observed, double threshold) {
  params.emplace_back("observed", format_real(observed));
  params.emplace_back("lower_bound", format_real(threshold));
  const double ratio = observed > 0.0 ? threshold / observed : std::numeric_limits<double>::infinity();
  return CheckReport(std::move(name), std::move(params), ratio, 1.0);
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
}

}  // namespace ybkit

#include "redheffer/core.hpp"

#include <cmath>
#include <stdexcept>

namespace redheffer {

namespace {

void check_unit_interval(double y, const char* fn) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error(std::string(fn) + ": y must lie in [0, 1]");
  }
}

void check_index(int n, const char* fn) {
  if (n < 2) {
    throw std::domain_error(std::string(fn) + ": index must be >= 2");
  }
}

}  // namespace

double alpha_sharp() { return std::log(2.0) / std::log(4.0 / kPi); }

double success_bound() { return 8.0 / (kPi * kPi); }

double alpha_two() { return std::log(2.0) / std::log(21.0 / 16.0); }

double product_limit() { return kPi / 4.0; }

double partial_product(int n, double y) {
  check_index(n, "partial_product");
  check_unit_interval(y, "partial_product");
  double prod = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double odd = 2.0 * k - 1.0;
    prod *= 1.0 - y / (odd * odd);
  }
  return prod;
}

double partial_product_log_deriv(int n, double y) {
  check_index(n, "partial_product_log_deriv");
  check_unit_interval(y, "partial_product_log_deriv");
  double sum = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double odd = 2.0 * k - 1.0;
    sum += 1.0 / (odd * odd - y);
  }
  return -sum;
}

double infinite_product(double y) {
  check_unit_interval(y, "infinite_product");
  if (1.0 - y < 1e-12) {
    return kPi / 4.0;
  }
  return std::cos(kPi * std::sqrt(y) / 2.0) / (1.0 - y);
}

double induction_gap(int n, double alpha, double y) {
  check_index(n, "induction_gap");
  check_unit_interval(y, "induction_gap");
  if (!(alpha > 0.0)) {
    throw std::domain_error("induction_gap: alpha must be positive");
  }
  // log1p keeps full accuracy near y = 0 where the gap vanishes to first
  // order.
  const double lhs = std::exp(std::log1p(y) / alpha) * partial_product(n, y);
  return lhs - (1.0 + y / (4.0 * n - 2.0));
}

double margin(double alpha, double x) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("margin: alpha must be positive");
  }
  if (!(x >= 0.0 && x <= 0.5)) {
    throw std::domain_error("margin: x must lie in [0, 1/2]");
  }
  const double y = 4.0 * x * x;
  const double factor = std::exp(std::log1p(y) / alpha);
  if (x > 0.25) {
    // t = 1/2 - x is exact here (Sterbenz), and cos(pi x) = sin(pi t),
    // 1 - 4x^2 = 4t(1-t): both forms avoid the absolute-error floor of
    // ~2e-16 that the naive expressions hit as x -> 1/2.
    const double t = 0.5 - x;
    return factor * std::sin(kPi * t) - 4.0 * t * (1.0 - t);
  }
  return factor * std::cos(kPi * x) - (1.0 - y);
}

double corollary_lhs(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::domain_error("corollary_lhs: theta must lie in (0, 1)");
  }
  const double s = std::sin(kPi * theta);
  const double u = 1.0 - theta;
  return s * s * (1.0 / (theta * theta) + 1.0 / (u * u));
}

double induction_step_residual(int m, double y) {
  check_index(m, "induction_step_residual");
  check_unit_interval(y, "induction_step_residual");
  const double odd = 2.0 * m + 1.0;
  return (1.0 - y / (odd * odd)) * (1.0 + y / (4.0 * m - 2.0)) -
         (1.0 + y / (4.0 * m + 2.0));
}

double induction_step_residual_bound(int m, double y) {
  check_index(m, "induction_step_residual_bound");
  check_unit_interval(y, "induction_step_residual_bound");
  const double odd = 2.0 * m + 1.0;
  return 3.0 / (2.0 * (2.0 * m - 1.0) * odd * odd) * y * y;
}

}  // namespace redheffer

#include "curves.hpp"

#include <cmath>
#include <stdexcept>

namespace korient {

namespace {

void validate_k(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("edge arity must be at least 2");
}

void validate_neps(std::uint64_t n, std::uint32_t k, double eps) {
  validate_k(k);
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (!(eps > 0.0 && eps <= 0.5))
    throw std::invalid_argument("eps must lie in (0, 1/2]");
}

}  // namespace

double susceptibility_curve(double theta, std::uint32_t k) {
  validate_k(k);
  const double pole = 1.0 / (static_cast<double>(k) * (k - 1));
  if (!(theta >= 0.0 && theta < pole))
    throw std::invalid_argument("theta outside [0, 1/(k(k-1)))");
  return 1.0 / (1.0 - static_cast<double>(k) * (k - 1) * theta);
}

double error_curve(double theta, std::uint32_t k) {
  const double x = susceptibility_curve(theta, k);
  return x * x * x;
}

double error_margin(std::uint64_t n, std::uint32_t k, double eps) {
  validate_neps(n, k, eps);
  const double log_n = std::log(static_cast<double>(n));
  const double k3 = static_cast<double>(k) * k * k;
  return 199.0 * k3 * log_n * log_n * log_n /
         (eps * eps * eps * eps * std::sqrt(static_cast<double>(n)));
}

double susceptibility_bound(std::uint64_t n, std::uint32_t k, double eps) {
  validate_neps(n, k, eps);
  const double log_n = std::log(static_cast<double>(n));
  const double k3 = static_cast<double>(k) * k * k;
  const double eps7 = std::pow(eps, 7);
  return 1.0 / eps +
         200.0 * k3 * log_n * log_n * log_n / (eps7 * std::sqrt(static_cast<double>(n)));
}

double iteration_bound(std::uint64_t n, std::uint32_t k, double eps) {
  return 2.0 * static_cast<double>(k) * k * static_cast<double>(n) *
         susceptibility_bound(n, k, eps);
}

ReferenceCurves reference(std::uint64_t n, std::uint32_t k, double eps) {
  validate_neps(n, k, eps);
  const double theta =
      (1.0 - eps) / (static_cast<double>(k) * (k - 1));
  return ReferenceCurves{
      susceptibility_curve(theta, k),
      error_curve(theta, k),
      error_margin(n, k, eps),
      susceptibility_bound(n, k, eps),
      iteration_bound(n, k, eps),
  };
}

}  // namespace korient

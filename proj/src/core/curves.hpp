#pragma once

#include <cstdint>

namespace korient {

// Closed-form references for the subcritical regime, all in terms of the
// scaled time theta = (rounds so far) / n. Logs are natural throughout.

// Susceptibility limit 1/(1 - k(k-1)theta); valid for theta < 1/(k(k-1)).
double susceptibility_curve(double theta, std::uint32_t k);

// Error-term growth curve, the cube of the susceptibility curve.
double error_curve(double theta, std::uint32_t k);

// Concentration margin 199 k^3 log^3(n) / (eps^4 sqrt(n)).
double error_margin(std::uint64_t n, std::uint32_t k, double eps);

// High-probability susceptibility ceiling at theta = (1-eps)/(k(k-1)):
// 1/eps + 200 k^3 log^3(n) / (eps^7 sqrt(n)).
double susceptibility_bound(std::uint64_t n, std::uint32_t k, double eps);

// Total walk-iteration ceiling 2 k^2 n * susceptibility_bound.
double iteration_bound(std::uint64_t n, std::uint32_t k, double eps);

struct ReferenceCurves {
  double x;                     // susceptibility curve at (1-eps)/(k(k-1))
  double f;                     // error curve there
  double delta;                 // concentration margin
  double susceptibility_bound;  // ceiling on the susceptibility
  double iteration_bound;       // ceiling on total walk iterations
};

// All of the above evaluated at the subcritical endpoint; eps in (0, 1/2].
ReferenceCurves reference(std::uint64_t n, std::uint32_t k, double eps);

}  // namespace korient

#include <cmath>
#include <stdexcept>

#include "curves.hpp"
#include "doctest.h"

using namespace korient;

TEST_CASE("susceptibility curve basics") {
  CHECK(susceptibility_curve(0.0, 3) == 1.0);
  CHECK(error_curve(0.0, 3) == 1.0);
  // k=3: pole at 1/6; halfway there the curve doubles
  CHECK(susceptibility_curve(1.0 / 12.0, 3) == doctest::Approx(2.0));
  CHECK(error_curve(1.0 / 12.0, 3) == doctest::Approx(8.0));
  // k=4: pole at 1/12
  CHECK(susceptibility_curve(1.0 / 24.0, 4) == doctest::Approx(2.0));

  CHECK_THROWS_AS(susceptibility_curve(1.0 / 6.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(susceptibility_curve(-0.01, 3), std::invalid_argument);
  CHECK_THROWS_AS(susceptibility_curve(0.0, 1), std::invalid_argument);
}

TEST_CASE("curve is strictly increasing up to the pole") {
  double last = 0.0;
  for (int i = 0; i < 160; ++i) {
    const double theta = i / 1000.0;  // up to 0.159 < 1/6
    const double x = susceptibility_curve(theta, 3);
    CHECK(x > last);
    last = x;
  }
}

TEST_CASE("reference values at n=1e5, k=3, eps=1/2") {
  const ReferenceCurves ref = reference(100000, 3, 0.5);
  CHECK(ref.x == doctest::Approx(2.0));
  CHECK(ref.f == doctest::Approx(8.0));

  // recompute independently with library functions
  const double log_n = std::log(1e5);
  const double delta = 199.0 * 27.0 * std::pow(log_n, 3) / (std::pow(0.5, 4) * std::sqrt(1e5));
  CHECK(ref.delta == doctest::Approx(delta).epsilon(1e-12));
  const double chi_bound =
      2.0 + 200.0 * 27.0 * std::pow(log_n, 3) / (std::pow(0.5, 7) * std::sqrt(1e5));
  CHECK(ref.susceptibility_bound == doctest::Approx(chi_bound).epsilon(1e-12));
  CHECK(ref.iteration_bound ==
        doctest::Approx(18.0 * 1e5 * chi_bound).epsilon(1e-12));

  // the margin term dominates 1/eps at this scale
  CHECK(ref.susceptibility_bound > 1000.0);
}

TEST_CASE("bound scales come out in a sane order") {
  // larger n shrinks the margin; smaller eps inflates it
  CHECK(error_margin(1u << 20, 3, 0.25) < error_margin(1u << 10, 3, 0.25));
  CHECK(error_margin(100000, 3, 0.1) > error_margin(100000, 3, 0.4));
  CHECK(susceptibility_bound(100000, 4, 0.3) >
        susceptibility_bound(100000, 3, 0.3));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(reference(100000, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reference(100000, 3, 0.51), std::invalid_argument);
  CHECK_THROWS_AS(reference(100000, 3, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(reference(100000, 1, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(reference(1, 3, 0.25), std::invalid_argument);
  CHECK_NOTHROW(reference(100000, 3, 0.5));  // boundary value is usable
  CHECK_NOTHROW(reference(100000, 3, 0.01));
}

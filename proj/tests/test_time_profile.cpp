#include <cmath>

#include "doctest.h"
#include "etapt/time_profile.hpp"

using namespace etapt;

TEST_CASE("profile evaluation across kinds") {
  CHECK(TimeProfile::constant(2.5)(17.0) == 2.5);

  const auto s = TimeProfile::sinusoidal(1.0, 0.3, 2.0, 0.0);
  CHECK(s(0.0) == doctest::Approx(1.0));
  CHECK(s(0.25 * M_PI) == doctest::Approx(1.3));

  const auto p = TimeProfile::polynomial({1.0, 2.0, 3.0});
  CHECK(p(2.0) == doctest::Approx(1.0 + 4.0 + 12.0));

  const auto smp = TimeProfile::sampled({0.0, 1.0, 2.0}, {0.0, 2.0, 2.0});
  CHECK(smp(0.5) == doctest::Approx(1.0));
  CHECK(smp(1.5) == doctest::Approx(2.0));
  CHECK(smp(2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(smp(-0.1), std::domain_error);
  CHECK_THROWS_AS(smp(2.1), std::domain_error);
}

TEST_CASE("sampled profiles require strictly increasing times") {
  CHECK_THROWS_AS(TimeProfile::sampled({0.0, 0.0, 1.0}, {0.0, 1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TimeProfile::sampled({0.0, 1.0}, {0.0}), std::invalid_argument);
}

TEST_CASE("closed-form integrals match quadrature") {
  const auto s = TimeProfile::sinusoidal(1.0, 0.3, 2.0, 0.5);
  const auto p = TimeProfile::polynomial({0.5, -1.0, 0.25, 2.0});

  // brute-force trapezoid oracle
  const auto quad = [](const TimeProfile& f, double a, double b) {
    const int n = 200000;
    double acc = 0.5 * (f(a) + f(b));
    const double h = (b - a) / n;
    for (int i = 1; i < n; ++i) acc += f(a + i * h);
    return acc * h;
  };

  CHECK(s.integral(0.0, 3.0) == doctest::Approx(quad(s, 0.0, 3.0)).epsilon(1e-9));
  CHECK(p.integral(-1.0, 2.0) == doctest::Approx(quad(p, -1.0, 2.0)).epsilon(1e-9));
  CHECK(TimeProfile::constant(2.0).integral(1.0, 4.0) == doctest::Approx(6.0));

  // zero-frequency sinusoid degenerates to a constant
  const auto s0 = TimeProfile::sinusoidal(1.0, 0.5, 0.0, M_PI / 6);
  CHECK(s0.integral(0.0, 2.0) == doctest::Approx(2.0 * (1.0 + 0.5 * 0.5)));
}

TEST_CASE("sampled integral uses Simpson and is exact on the linear pieces") {
  const auto smp = TimeProfile::sampled({0.0, 1.0, 2.0, 3.0}, {0.0, 2.0, 2.0, -1.0});
  CHECK(smp.integral(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(smp.integral(1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(smp.integral(0.0, 3.0) == doctest::Approx(1.0 + 2.0 + 0.5).epsilon(1e-9));
}

#include <catch2/catch_amalgamated.hpp>

#include "oll/orlicz_function.hpp"
#include "test_helpers.hpp"

using Catch::Approx;
using namespace oll;

TEST_CASE("power family evaluation and inverse", "[orlicz]") {
  OrliczFunction phi = OrliczFunction::power(2.0, 0.5);
  CHECK(phi(2.0) == Approx(2.0));
  CHECK(phi(0.0) == 0.0);
  CHECK(phi.inverse(2.0) == Approx(2.0));
  CHECK(phi.inverse(phi(3.7)) == Approx(3.7));

  OrliczFunction e = OrliczFunction::expm();
  CHECK(e(1.0) == Approx(std::exp(1.0) - 2.0));
  CHECK(e.inverse(e(2.5)) == Approx(2.5).epsilon(1e-10));
  CHECK(e.inverse(0.0) == 0.0);

  CHECK_THROWS_AS(OrliczFunction::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(OrliczFunction::power(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("conjugate of a power function is the dual power", "[orlicz]") {
  // (1/p) u^p pairs with (1/q) u^q
  OrliczFunction half_sq = OrliczFunction::power(2.0, 0.5);
  OrliczFunction conj = half_sq.conjugate();
  REQUIRE(conj.family() == OrliczFunction::Family::Power);
  CHECK(conj.power_p() == Approx(2.0));
  CHECK(conj.power_c() == Approx(0.5));

  OrliczFunction third_cube = OrliczFunction::power(3.0, 1.0 / 3.0).conjugate();
  CHECK(third_cube.power_p() == Approx(1.5));
  CHECK(third_cube.power_c() == Approx(2.0 / 3.0));

  OrliczFunction sq = OrliczFunction::power(2.0).conjugate();
  CHECK(sq.power_p() == Approx(2.0));
  CHECK(sq.power_c() == Approx(0.25));
}

TEST_CASE("conjugate of expm has the closed form", "[orlicz]") {
  // (e^t - t - 1)^* (s) = (1+s)log(1+s) - s
  OrliczFunction conj = OrliczFunction::expm().conjugate();
  auto closed = [](double s) { return (1.0 + s) * std::log1p(s) - s; };
  CHECK(conj(1.0) == Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-8));
  for (double s : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
    CHECK(conj(s) == Approx(closed(s)).epsilon(1e-8));
  }
  CHECK(conj(0.0) == Approx(0.0).margin(1e-10));
}

TEST_CASE("Young inequality holds and is tight on the graph of the derivative", "[orlicz]") {
  helpers::Rng rng(21);
  int violations = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    OrliczFunction phi = helpers::random_phi(rng);
    OrliczFunction conj = phi.conjugate();
    double t = helpers::uniform(rng, 0.0, 8.0);
    double s = helpers::uniform(rng, 0.0, 8.0);
    if (t * s > phi(t) + conj(s) + 1e-9 * (1.0 + phi(t) + conj(s))) ++violations;
  }
  CHECK(violations == 0);

  // equality when s = phi'(t): check for the power family where it is explicit
  for (double t : {0.5, 1.0, 2.0, 3.0}) {
    OrliczFunction phi = OrliczFunction::power(3.0, 1.0 / 3.0);
    double s = t * t;  // derivative of t^3/3
    CHECK(phi(t) + phi.conjugate()(s) == Approx(t * s).epsilon(1e-9));
  }
}

TEST_CASE("biconjugation returns the original function", "[orlicz]") {
  helpers::Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    OrliczFunction phi = helpers::random_phi(rng);
    OrliczFunction back = phi.conjugate().conjugate();
    for (int k = 0; k < 10; ++k) {
      double t = helpers::uniform(rng, 0.0, 6.0);
      CHECK(back(t) == Approx(phi(t)).epsilon(1e-7).margin(1e-9));
    }
  }
}

TEST_CASE("numeric conjugation matches the closed form for powers", "[orlicz]") {
  // force the numeric path by wrapping the power law as a custom function
  OrliczFunction as_custom =
      OrliczFunction::custom([](double t) { return 0.5 * t * t; }, "half-square");
  OrliczFunction conj = as_custom.conjugate();
  for (double s : {0.1, 0.7, 1.0, 3.0, 12.0}) {
    CHECK(conj(s) == Approx(0.5 * s * s).epsilon(1e-8));
  }
}

TEST_CASE("convexity spot checks", "[orlicz]") {
  helpers::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    OrliczFunction phi = helpers::random_phi(rng);
    double a = helpers::uniform(rng, 0.0, 5.0);
    double b = helpers::uniform(rng, 0.0, 5.0);
    double lam = helpers::uniform(rng, 0.0, 1.0);
    double mix = phi(lam * a + (1 - lam) * b);
    double hull = lam * phi(a) + (1 - lam) * phi(b);
    CHECK(mix <= hull + 1e-9 * (1.0 + hull));
  }
}

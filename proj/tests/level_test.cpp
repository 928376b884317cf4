#include <catch2/catch_amalgamated.hpp>

#include "oll/level.hpp"
#include "oll/weight.hpp"
#include "test_helpers.hpp"

using Catch::Approx;
using namespace oll;

namespace {

// the worked two-piece family: f_x = x on [0,1) plus 1 on [1,4) against
// W(t) = sqrt(t). One block with scale 2/(x+3) while 1 <= x <= 3, two blocks
// with scales (1/x, 1/3) once x > 3.
StepFunction two_piece(double x) { return StepFunction({0, 1, 4}, {x, 1}); }
const Weight kSqrt = Weight::power_law(0.5, 0.5);

}  // namespace

TEST_CASE("two-piece family: single block regime", "[level]") {
  for (double x : {1.0, 1.5, 2.0, 2.5, 2.99}) {
    LevelDecomposition d = level_decompose(two_piece(x), kSqrt);
    REQUIRE(d.blocks() == 1);
    CHECK(d.cut_times == std::vector<double>{0.0, 4.0});
    CHECK(d.lambda[0] == Approx(2.0 / (x + 3.0)).epsilon(1e-12));
    CHECK(d.ratio[0] == Approx((x + 3.0) / 2.0).epsilon(1e-12));
    CHECK(d.f_mass[0] == Approx(x + 3.0));
    CHECK(d.w_mass[0] == Approx(2.0));

    StepFunction g = level_minimizer(two_piece(x), d);
    CHECK(g(0.5) == Approx(2.0 * x / (x + 3.0)));
    CHECK(g(2.0) == Approx(2.0 / (x + 3.0)));
  }
}

TEST_CASE("two-piece family: split regime", "[level]") {
  for (double x : {3.5, 4.0, 10.0}) {
    LevelDecomposition d = level_decompose(two_piece(x), kSqrt);
    REQUIRE(d.blocks() == 2);
    CHECK(d.cut_times == std::vector<double>{0.0, 1.0, 4.0});
    CHECK(d.lambda[0] == Approx(1.0 / x));
    CHECK(d.lambda[1] == Approx(1.0 / 3.0));
    CHECK(d.ratio[0] == Approx(x));
    CHECK(d.ratio[1] == Approx(3.0));
    CHECK(d.w_mass[0] == Approx(1.0));
    CHECK(d.w_mass[1] == Approx(1.0));

    StepFunction g = level_minimizer(two_piece(x), d);
    CHECK(g(0.5) == Approx(1.0));
    CHECK(g(2.0) == Approx(1.0 / 3.0));
  }
}

TEST_CASE("two-piece family: the tie goes to the largest attainer", "[level]") {
  // at x = 3 both chords have slope 1/3; the interior breakpoint becomes a
  // contact, not a cut, and both closed forms agree on the minimizer
  LevelDecomposition d = level_decompose(two_piece(3.0), kSqrt);
  REQUIRE(d.blocks() == 1);
  CHECK(d.lambda[0] == Approx(1.0 / 3.0));
  REQUIRE(d.contacts.size() == 1);
  CHECK(d.contacts[0] == 1);

  StepFunction g = level_minimizer(two_piece(3.0), d);
  CHECK(g(0.5) == Approx(1.0));
  CHECK(g(2.0) == Approx(1.0 / 3.0));

  // off the tie there is nothing to report
  CHECK(level_decompose(two_piece(2.0), kSqrt).contacts.empty());
  CHECK(level_decompose(two_piece(4.0), kSqrt).contacts.empty());
}

TEST_CASE("level function and inverse level weight on the split instance", "[level]") {
  StepFunction f = two_piece(4.0);
  LevelFunction lf = level_function(f, kSqrt);
  REQUIRE(lf.pieces.size() == 2);
  CHECK(lf.pieces[0].ratio == Approx(4.0));
  CHECK(lf.pieces[1].ratio == Approx(3.0));
  CHECK(lf.eval(kSqrt, 0.25) == Approx(4.0 * kSqrt.density(0.25)));
  CHECK(lf.eval(kSqrt, 2.0) == Approx(3.0 * kSqrt.density(2.0)));
  CHECK(lf.eval(kSqrt, 5.0) == 0.0);

  InverseLevelWeight iw = inverse_level_weight(f, kSqrt);
  CHECK(iw.eval(0.5) == Approx(1.0));
  CHECK(iw.eval(2.0) == Approx(1.0 / 3.0));
  CHECK(iw.eval(9.0) == Approx(kSqrt.density(9.0)));  // w takes over past t_n

  // step tail: rebuild against a step weight and check the seam
  Weight st = Weight::step(StepFunction({0, 2, 6}, {2.0, 0.5}));
  StepFunction h({0, 1, 3}, {3.0, 1.0});
  InverseLevelWeight iw2 = inverse_level_weight(h, st);
  StepFunction full = iw2.as_step();
  CHECK(full(2.0) == Approx(iw2.eval(2.0)));
  CHECK(full(3.5) == Approx(0.5));
  CHECK(full.support_end() == Approx(6.0));
}

TEST_CASE("inverse level weight keeps the total mass", "[level]") {
  helpers::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    StepFunction f = helpers::random_decreasing(rng, 6);
    Weight w = helpers::random_weight(rng, f.support_end());
    InverseLevelWeight iw = inverse_level_weight(f, w);
    CHECK(iw.on_support.integral() == Approx(w.primitive(f.support_end())).epsilon(1e-10));
  }
}

TEST_CASE("minimizer invariants on random instances", "[level]") {
  helpers::Rng rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    StepFunction f = helpers::random_decreasing(rng, 8);
    Weight w = helpers::random_weight(rng, f.support_end());
    LevelDecomposition d = level_decompose(f, w);
    StepFunction g = level_minimizer(f, d);

    // G = W at every cut, in particular the full masses agree
    auto cum = cumulatives(f, w);
    for (std::size_t j = 1; j < d.cuts.size(); ++j)
      CHECK(g.integral(0.0, d.cut_times[j]) == Approx(cum.W[d.cuts[j]]).epsilon(1e-10));

    // lambda strictly increasing, ratios strictly decreasing
    for (std::size_t j = 1; j < d.blocks(); ++j) {
      CHECK(d.lambda[j] > d.lambda[j - 1]);
      CHECK(d.ratio[j] < d.ratio[j - 1]);
    }

    CHECK(g.is_decreasing());
    CHECK(submajorized(g, w));
  }
}

TEST_CASE("each block is a maximal level interval", "[level]") {
  helpers::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    StepFunction f = helpers::random_decreasing(rng, 6);
    Weight w = helpers::random_weight(rng, f.support_end());
    LevelDecomposition d = level_decompose(f, w);
    for (std::size_t j = 0; j < d.blocks(); ++j)
      CHECK(is_level_interval(f, w, d.cut_times[j], d.cut_times[j + 1]));
  }
}

TEST_CASE("is_level_interval frozen answers", "[level]") {
  StepFunction f = two_piece(4.0);
  CHECK(is_level_interval(f, kSqrt, 0.0, 1.0));
  CHECK(is_level_interval(f, kSqrt, 1.0, 4.0));
  CHECK_FALSE(is_level_interval(f, kSqrt, 0.0, 4.0));  // head chord is steeper

  StepFunction e = two_piece(2.0);
  CHECK(is_level_interval(e, kSqrt, 0.0, 4.0));  // single-block regime

  CHECK_THROWS_AS(is_level_interval(f, kSqrt, 0.0, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(is_level_interval(f, kSqrt, 4.0, 1.0), std::invalid_argument);
}

TEST_CASE("minimizer beats every feasible competitor", "[level]") {
  helpers::Rng rng(34);
  OrliczFunction phis[] = {OrliczFunction::power(2.0), OrliczFunction::power(3.0, 1.0 / 3.0),
                           OrliczFunction::expm()};
  for (int trial = 0; trial < 300; ++trial) {
    StepFunction f = helpers::random_decreasing(rng, 5);
    Weight w = helpers::random_weight(rng, f.support_end());
    LevelDecomposition d = level_decompose(f, w);
    StepFunction g = level_minimizer(f, d);

    std::vector<double> b = helpers::random_feasible_heights(rng, f, w);
    const OrliczFunction& phi = phis[trial % 3];

    auto objective = [&](const std::vector<double>& h) {
      double s = 0.0;
      for (std::size_t i = 0; i < f.pieces(); ++i)
        s += phi(f.values()[i] / h[i]) * h[i] * f.length(i);
      return s;
    };
    std::vector<double> gv;
    for (std::size_t i = 0; i < f.pieces(); ++i)
      gv.push_back(g(0.5 * (f.breakpoints()[i] + f.breakpoints()[i + 1])));

    double at_g = objective(gv), at_b = objective(b);
    CHECK(at_g <= at_b * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("weight shape moves the cuts", "[level]") {
  StepFunction f({0, 1, 2}, {2.0, 1.0});

  // flat weight: chords 1/2 then 1 split at t = 1
  Weight flat = Weight::power_law(1.0, 0.0);
  LevelDecomposition d1 = level_decompose(f, flat);
  REQUIRE(d1.blocks() == 2);
  CHECK(d1.lambda[0] == Approx(0.5));
  CHECK(d1.lambda[1] == Approx(1.0));

  // front-loaded weight: the full chord 3.1/3 undercuts the head chord 3/2,
  // so the minimum rule fuses everything into one block
  Weight heavy_head = Weight::step(StepFunction({0, 1, 2}, {3.0, 0.1}));
  LevelDecomposition d2 = level_decompose(f, heavy_head);
  REQUIRE(d2.blocks() == 1);
  CHECK(d2.lambda[0] == Approx(3.1 / 3.0));
}

TEST_CASE("scale invariance of the cuts", "[level]") {
  helpers::Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    StepFunction f = helpers::random_decreasing(rng, 6);
    Weight w = helpers::random_weight(rng, f.support_end());
    double k = helpers::uniform(rng, 0.1, 10.0);
    LevelDecomposition d1 = level_decompose(f, w);
    LevelDecomposition d2 = level_decompose(f.scaled(k), w);
    REQUIRE(d1.cuts == d2.cuts);
    for (std::size_t j = 0; j < d1.blocks(); ++j)
      CHECK(d2.ratio[j] == Approx(k * d1.ratio[j]).epsilon(1e-12));
  }
}

TEST_CASE("decomposition rejects bad input", "[level]") {
  CHECK_THROWS_AS(level_decompose(StepFunction::zero(), kSqrt), std::invalid_argument);
  CHECK_THROWS_AS(level_decompose(StepFunction({0, 1, 2}, {1.0, 2.0}), kSqrt),
                  std::invalid_argument);
  // weight density dies before the support of f ends
  Weight shortw = Weight::step(StepFunction({0, 1}, {1.0}));
  CHECK_THROWS_AS(level_decompose(StepFunction({0, 3}, {1.0}), shortw), std::invalid_argument);
}

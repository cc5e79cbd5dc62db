#include <doctest.h>

#include <cmath>
#include <numbers>

#include "avgdist/energy.hpp"
#include "avgdist/optimize.hpp"
#include "avgdist/rng.hpp"
#include "avgdist/verify.hpp"
#include "oracles.hpp"

using namespace avgdist;

namespace {

// Independent closed form for the unit square: by symmetry the integral is
// eight copies of int_0^(1/2) int_0^x y^p dy dx = (1/2)^(p+2) / ((p+1)(p+2)),
// so F_p(square) = 2^(1-p) / ((p+1)(p+2)).
double square_integral(double p) {
  return std::pow(2.0, 1.0 - p) / ((p + 1.0) * (p + 2.0));
}

}  // namespace

TEST_CASE("avg_dist_integral matches the square closed form") {
  ConvexPolygon sq = oracles::unit_square();
  CHECK(avg_dist_integral(sq, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(avg_dist_integral(sq, 2.0) == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0})
    CHECK(avg_dist_integral(sq, p) == doctest::Approx(square_integral(p)).epsilon(1e-12));
  CHECK_THROWS_AS(avg_dist_integral(sq, 0.5), InvalidParams);
}

TEST_CASE("avg_dist_integral matches the rectangle closed form") {
  // Two-piece profile by hand: A(t) = (2-2t)(1-2t), F(p=1) = 5/12.
  ConvexPolygon rect = make_polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  CHECK(avg_dist_integral(rect, 1.0) == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("regular polygons approach the disk closed form") {
  ConvexPolygon gon = oracles::regular_ngon(256);
  EnergyBreakdown b1 = energy(gon, {1.0, 1.0});
  CHECK(std::abs(b1.total - (std::numbers::pi / 3.0 + 2.0)) < 1e-3);
  EnergyBreakdown b2 = energy(gon, {2.0, 1.0});
  CHECK(std::abs(b2.total - (std::numbers::pi / 6.0 + 2.0)) < 1e-3);
}

TEST_CASE("monte carlo estimator agrees with the exact integral") {
  ConvexPolygon sq = oracles::unit_square();
  McEstimate mc = avg_dist_mc(sq, 1.0, 1000000, 123);
  CHECK(std::abs(mc.estimate - 1.0 / 6.0) <= 4.0 * mc.std_error);

  // Deterministic per seed.
  McEstimate again = avg_dist_mc(sq, 1.0, 10000, 7);
  McEstimate once = avg_dist_mc(sq, 1.0, 10000, 7);
  CHECK(again.estimate == once.estimate);
  CHECK(again.std_error == once.std_error);

  McEstimate one = avg_dist_mc(sq, 1.0, 1, 99);
  CHECK(std::isfinite(one.std_error));
}

TEST_CASE("monte carlo covers random shapes and exponents") {
  for (int s = 0; s < 8; ++s) {
    ConvexPolygon p = random_convex_polygon(5 + s % 9, 1300 + s);
    for (double exponent : {1.0, 1.5, 2.0, 3.0}) {
      double exact = avg_dist_integral(p, exponent);
      McEstimate mc = avg_dist_mc(p, exponent, 100000, mix_seed(5, s));
      CHECK(std::abs(exact - mc.estimate) <= 4.0 * mc.std_error);
    }
  }
}

TEST_CASE("energy breakdown of the unit square") {
  ConvexPolygon sq = oracles::unit_square();
  EnergyBreakdown bd = energy(sq, {1.0, 1.0});
  CHECK(bd.avg_dist == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(bd.perimeter == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(bd.area == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bd.ratio_term == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(bd.total == doctest::Approx(1.0 / 6.0 + 4.0).epsilon(1e-12));
  CHECK(bd.total == bd.avg_dist + bd.ratio_term);

  // Unit area: generalized exponents cannot change the ratio term.
  EnergyBreakdown gen = energy(sq, {1.0, 1.0, 1.0, 2.0});
  CHECK(gen.ratio_term == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(gen.total == doctest::Approx(bd.total).epsilon(1e-15));
}

TEST_CASE("disk energy closed forms") {
  EnergyBreakdown d1 = disk_energy(1.0, 1.0, 1.0);
  CHECK(d1.total == doctest::Approx(std::numbers::pi / 3.0 + 2.0).epsilon(1e-15));
  EnergyBreakdown d2 = disk_energy(2.0, 1.0, 1.0);
  CHECK(d2.total == doctest::Approx(std::numbers::pi / 6.0 + 2.0).epsilon(1e-15));

  // The optimal disk radius, found independently by golden-section search.
  double r_star = oracles::golden_minimize(
      [](double r) { return std::numbers::pi * r * r * r / 3.0 + 2.0 / r; }, 0.1, 3.0);
  CHECK(r_star == doctest::Approx(std::pow(2.0 / std::numbers::pi, 0.25)).epsilon(1e-9));
  EnergyBreakdown opt = disk_energy(1.0, 1.0, r_star);
  double expected = std::numbers::pi * r_star * r_star * r_star / 3.0 + 2.0 / r_star;
  CHECK(opt.total == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(disk_energy(1.0, 1.0, 0.0), NonpositiveInput);
  CHECK_THROWS_AS(disk_energy(1.0, 1.0, -2.0), NonpositiveInput);
}

TEST_CASE("optimal_scale closed forms") {
  EnergyParams params{1.0, 1.0};
  // Stationary fixed point: F = lambda*ratio/(p+2).
  RescaleResult fp = optimal_scale(2.0, 6.0, params);
  CHECK(fp.r_star == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fp.rescaled_total == doctest::Approx(8.0).epsilon(1e-15));

  RescaleResult r2 = optimal_scale(1.0, 6.0, params);
  CHECK(r2.r_star == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));

  RescaleResult sq = optimal_scale(1.0 / 6.0, 4.0, params);
  CHECK(sq.r_star == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-15));
  CHECK(sq.rescaled_total < 1.0 / 6.0 + 4.0);
  CHECK(sq.rescaled_total == doctest::Approx(3.1712190).epsilon(1e-7));

  CHECK_THROWS_AS(optimal_scale(0.0, 1.0, params), NonpositiveInput);
  CHECK_THROWS_AS(optimal_scale(1.0, -1.0, params), NonpositiveInput);
}

TEST_CASE("optimal_scale never increases energy and is idempotent") {
  Rng rng(71);
  for (int s = 0; s < 50; ++s) {
    EnergyParams params{1.0 + 2.0 * rng.uniform01(), std::exp(rng.uniform(-2, 2))};
    double f = std::exp(rng.uniform(-3, 3));
    double ratio = std::exp(rng.uniform(-2, 2));
    RescaleResult r = optimal_scale(f, ratio, params);
    CHECK(r.rescaled_total <= f + params.lambda * ratio + 1e-12 * (f + params.lambda * ratio));
    double f2 = std::pow(r.r_star, params.p + 2.0) * f;
    double ratio2 = ratio / r.r_star;
    RescaleResult r_again = optimal_scale(f2, ratio2, params);
    CHECK(std::abs(r_again.r_star - 1.0) <= 1e-12);
  }
}

TEST_CASE("generalized rescaling works inside the exponent window only") {
  EnergyParams good{1.0, 1.0, 1.2, 1.0};  // 2 > 1.2 > 1/2
  RescaleResult r = optimal_scale(0.5, 2.0, good);
  // Direct 1D minimization of r^(p+2) F + lambda * ratio * r^(alpha-2beta).
  double direct = oracles::golden_minimize(
      [&](double rr) {
        return std::pow(rr, 3.0) * 0.5 + 2.0 * std::pow(rr, 1.2 - 2.0);
      },
      0.01, 10.0);
  CHECK(r.r_star == doctest::Approx(direct).epsilon(1e-7));

  EnergyParams outside{1.0, 1.0, 2.5, 1.0};  // alpha > 2 beta
  CHECK_THROWS_AS(optimal_scale(0.5, 2.0, outside), InvalidParams);
  CHECK(exponent_window_warnings(outside).size() > 0);
  CHECK(exponent_window_warnings(EnergyParams{1.0, 1.0}).empty());
}

TEST_CASE("parameter validation") {
  CHECK(param_errors({1.0, 1.0}).empty());
  CHECK(param_errors({0.5, 1.0}).size() == 1);
  CHECK(param_errors({1.0, 0.0}).size() == 1);
  CHECK(param_errors({0.0, -1.0}).size() == 2);
}

TEST_CASE("scaling covariance of the integral and the ratio") {
  Rng rng(73);
  for (int s = 0; s < 40; ++s) {
    ConvexPolygon p = random_convex_polygon(6 + s % 10, 1500 + s);
    double r = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    ConvexPolygon q = scaled(p, r);
    for (double exponent : {1.0, 2.5}) {
      double f = avg_dist_integral(p, exponent);
      double fr = avg_dist_integral(q, exponent);
      CHECK(fr == doctest::Approx(std::pow(r, exponent + 2.0) * f).epsilon(1e-9));
    }
    Measures mp = measures(p), mq = measures(q);
    CHECK(mq.perimeter / mq.area ==
          doctest::Approx(mp.perimeter / mp.area / r).epsilon(1e-9));
  }
}

TEST_CASE("chord cuts never increase the integral") {
  Rng rng(79);
  for (int s = 0; s < 60; ++s) {
    ConvexPolygon p = random_convex_polygon(6 + s % 9, 1600 + s);
    int n = static_cast<int>(p.size());
    BoundaryPoint w1{rng.uniform_int(0, n - 1), rng.uniform01()};
    BoundaryPoint w2{rng.uniform_int(0, n - 1), rng.uniform01()};
    ConvexPolygon cut = chord_cut(p, w1, w2);
    double before = avg_dist_integral(p, 1.0);
    double after = avg_dist_integral(cut, 1.0);
    CHECK(after <= before * (1.0 + 1e-12));
  }
}

TEST_CASE("area lower bound holds on a corpus") {
  for (int s = 0; s < 60; ++s) {
    ConvexPolygon p = corpus_polygon(3, s);
    for (double lambda : {0.1, 1.0, 10.0}) {
      EnergyBreakdown bd = energy(p, {1.0, lambda});
      CHECK(bd.area >= 4.0 * std::numbers::pi * lambda * lambda / (bd.total * bd.total) *
                           (1.0 - 1e-12));
    }
  }
}

TEST_CASE("optimally rescaled regular polygons decrease toward the disk") {
  EnergyParams params{1.0, 1.0};
  double disk_opt = optimal_scale(disk_energy(1, 1, 1).avg_dist, 2.0, params).rescaled_total;
  double prev = 1e300;
  for (int n : {8, 16, 64, 256}) {
    EnergyBreakdown bd = energy(oracles::regular_ngon(n), params);
    double total = optimal_scale(bd.avg_dist, bd.perimeter / bd.area, params).rescaled_total;
    CHECK(total < prev);
    CHECK(total > disk_opt);
    prev = total;
  }
  CHECK(prev - disk_opt < 1e-3);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "avgdist/erosion.hpp"
#include "avgdist/metrics.hpp"
#include "avgdist/rng.hpp"
#include "oracles.hpp"

using namespace avgdist;

TEST_CASE("unit square erodes in a single exact piece") {
  ErosionProfile prof = erosion_profile(oracles::unit_square());
  REQUIRE(prof.pieces().size() == 1);
  const ErosionPiece& pc = prof.pieces()[0];
  CHECK(pc.a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pc.b == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(pc.c == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(prof.inradius() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(prof.area_at(0.25) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("equilateral triangle shrinks similarly") {
  ConvexPolygon tri = make_polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
  ErosionProfile prof = erosion_profile(tri);
  double rin = 1.0 / (2.0 * std::sqrt(3.0));
  CHECK(prof.inradius() == doctest::Approx(rin).epsilon(1e-13));
  double a0 = std::sqrt(3.0) / 4.0;
  for (double frac : {0.2, 0.5, 0.8}) {
    double t = frac * rin;
    CHECK(prof.area_at(t) == doctest::Approx(a0 * (1.0 - frac) * (1.0 - frac)).epsilon(1e-12));
  }
}

TEST_CASE("2x1 rectangle collapses to a segment at t = 1/2") {
  ConvexPolygon rect = make_polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  ErosionProfile prof = erosion_profile(rect);
  REQUIRE(prof.pieces().size() == 1);
  const ErosionPiece& pc = prof.pieces()[0];
  // A(t) = (2 - 2t)(1 - 2t) = 2 - 6t + 4t^2 on [0, 1/2]; the terminal piece
  // is empty because the body degenerates to a segment.
  CHECK(pc.a == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pc.b == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(pc.c == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(prof.inradius() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("erode basics on the unit square") {
  ConvexPolygon sq = oracles::unit_square();
  auto same = erode(sq, 0.0);
  REQUIRE(same.has_value());
  CHECK(sym_diff_area(*same, sq) == 0.0);

  auto half = erode(sq, 0.25);
  REQUIRE(half.has_value());
  CHECK(measures(*half).area == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_FALSE(erode(sq, 0.6).has_value());
  CHECK_THROWS_AS(erode(sq, -0.1), std::invalid_argument);
}

TEST_CASE("erosion semigroup on random polygons") {
  for (int s = 0; s < 40; ++s) {
    ConvexPolygon p = random_convex_polygon(5 + s % 12, 500 + s);
    double rin = erosion_profile(p).inradius();
    double diam = measures(p).diameter;
    Rng rng(mix_seed(31, s));
    for (int k = 0; k < 3; ++k) {
      double a = rng.uniform(0.0, 0.9) * rin;
      double b = rng.uniform(0.0, 0.95 * rin - a);
      if (b <= 0) continue;
      auto inner = erode(p, a);
      REQUIRE(inner.has_value());
      auto two_step = erode(*inner, b);
      auto one_step = erode(p, a + b);
      REQUIRE(two_step.has_value());
      REQUIRE(one_step.has_value());
      CHECK(hausdorff_distance(*two_step, *one_step) <= 1e-9 * diam);
    }
  }
}

TEST_CASE("profile matches eroded areas") {
  for (int s = 0; s < 30; ++s) {
    ConvexPolygon p = random_convex_polygon(6 + s % 10, 600 + s);
    ErosionProfile prof = erosion_profile(p);
    double a0 = measures(p).area;
    Rng rng(mix_seed(32, s));
    for (int k = 0; k < 100; ++k) {
      double t = rng.uniform(0.0, prof.inradius());
      auto body = erode(p, t);
      double area = body ? measures(*body).area : 0.0;
      CHECK(std::abs(area - prof.area_at(t)) <= 1e-9 * a0);
    }
  }
}

TEST_CASE("profile shape: non-increasing, convex, pinned at both ends") {
  for (int s = 0; s < 30; ++s) {
    ConvexPolygon p = random_convex_polygon(5 + s % 14, 700 + s);
    ErosionProfile prof = erosion_profile(p);
    double a0 = measures(p).area;
    CHECK(prof.area_at(0.0) == doctest::Approx(a0).epsilon(1e-12));
    CHECK(prof.area_at(prof.inradius() * (1.0 - 1e-12)) <= 1e-9 * a0);
    double prev = a0 * (1.0 + 1e-12);
    for (int k = 0; k <= 200; ++k) {
      double t = prof.inradius() * k / 200.0 * (1.0 - 1e-12);
      double a = prof.area_at(t);
      CHECK(a <= prev + 1e-9 * a0);
      prev = a;
    }
    for (const ErosionPiece& pc : prof.pieces()) {
      CHECK(pc.c >= 0.0);                                    // sum of cotangents
      CHECK(pc.b + 2.0 * pc.c * pc.t_begin <= 1e-12 * a0);   // A'(t_k) = -P(t_k) <= 0
      CHECK(pc.t_end > pc.t_begin);
    }
  }
}

TEST_CASE("erosion profile is rigid-motion invariant") {
  Rng rng(41);
  for (int s = 0; s < 15; ++s) {
    ConvexPolygon p = random_convex_polygon(7 + s % 9, 800 + s);
    ConvexPolygon q = translated(rotated(p, rng.uniform(0, 6.28)),
                                 {rng.uniform(-3, 3), rng.uniform(-3, 3)});
    ErosionProfile pp = erosion_profile(p), pq = erosion_profile(q);
    CHECK(pq.inradius() == doctest::Approx(pp.inradius()).epsilon(1e-9));
    for (int k = 1; k < 10; ++k) {
      double t = pp.inradius() * k / 10.0;
      CHECK(pq.area_at(t) == doctest::Approx(pp.area_at(t)).epsilon(1e-9));
    }
  }
}

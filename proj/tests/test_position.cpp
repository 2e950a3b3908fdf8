#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logmink/body.hpp"
#include "logmink/errors.hpp"
#include "logmink/position.hpp"

using namespace logmink;

TEST_CASE("inradius and outradius of simple pairs") {
  const Body b = disk(1.0);
  const Body b2 = disk(2.0);
  const RadiusSolution in = inradius(b2, b);
  CHECK(in.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(in.witness.norm() < 1e-12);
  CHECK(in.active_angles.size() >= 2);
  CHECK(outradius(b2, b).value == doctest::Approx(2.0).epsilon(1e-12));

  const Body e = ellipse(2.0, 1.0);
  const RadiusSolution ein = inradius(e, b);
  const RadiusSolution eout = outradius(e, b);
  CHECK(std::abs(ein.value - 1.0) < 1e-6);
  CHECK(std::abs(eout.value - 2.0) < 1e-6);
  CHECK(ein.active_angles.size() >= 2);
  CHECK(eout.active_angles.size() >= 2);

  const Body k = random_body(9);
  CHECK(inradius(k, k).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(outradius(k, k).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("inradius of a shifted disk reports the shift as witness") {
  const RadiusSolution in = inradius(disk(2.0, {0.3, -0.4}), disk(1.0));
  CHECK(in.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(in.witness.x == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(in.witness.y == doctest::Approx(-0.4).epsilon(1e-10));
}

TEST_CASE("radius properties on random pairs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Body k = random_body(2 * s);
    const Body l = random_body(2 * s + 1);
    const double r = inradius(k, l).value;
    const double big_r = outradius(k, l).value;
    CHECK(r <= big_r);
    CHECK(r * inradius(l, k).value <= 1.0 + 1e-8);
    CHECK(big_r * outradius(l, k).value >= 1.0 - 1e-8);
    CHECK(inradius(scale(k, 1.5), l).value == doctest::Approx(1.5 * r).epsilon(1e-8));
    CHECK(outradius(scale(k, 1.5), l).value == doctest::Approx(1.5 * big_r).epsilon(1e-8));
    CHECK(inradius(translate(k, {0.05, 0.02}), l).value == doctest::Approx(r).epsilon(1e-10));
  }
}

TEST_CASE("dilation_position") {
  const Body b = disk(1.0);
  const PositionedPair disks = dilation_position(disk(2.0), b);
  CHECK(disks.report.r == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(disks.report.R == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(disks.report.v.norm() < 1e-12);
  CHECK(disks.report.max_violation < 1e-12);

  const Body k = random_body(77);
  const PositionedPair same = dilation_position(k, k);
  CHECK(same.report.r == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(same.report.R == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(same.report.v.norm() < 1e-10);
  CHECK(same.report.k_shift.norm() < 1e-10);

  // Ellipse against the disk: 1 h_L' <= h_K' <= 2 h_L' at every node.
  const PositionedPair e = dilation_position(ellipse(2.0, 1.0), b);
  CHECK(e.report.max_violation <= 1e-8);
  for (int j = 0; j < e.k.size(); ++j) {
    CHECK(e.l.h()[j] <= e.k.h()[j] + 1e-8);
    CHECK(e.k.h()[j] <= 2.0 * e.l.h()[j] + 1e-8);
  }
  CHECK(is_dilation_position(e.k, e.l));
}

TEST_CASE("dilation_position places random non-symmetric pairs") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Body k = random_body(1000 + 2 * s);
    const Body l = random_body(1001 + 2 * s);
    const PositionedPair p = dilation_position(k, l);
    CHECK(p.report.max_violation <= 1e-8);
    CHECK(p.report.origin_margin > 0.0);
    CHECK(p.report.r <= p.report.R);
    CHECK(is_dilation_position(p.k, p.l, 1e-8));
    // Between nodes the containment can fail by O(dtheta^2) only.
    const double fine = containment_violation(p.k.resampled(1024), p.l.resampled(1024),
                                              p.report.r, p.report.R);
    CHECK(fine < 1e-3);
    // Repositioning a positioned pair is a fixed point.
    const PositionedPair again = dilation_position(p.k, p.l);
    CHECK(again.report.v.norm() < 1e-8);
    CHECK(again.report.k_shift.norm() < 1e-8);
  }
}

TEST_CASE("homothets are positioned exactly") {
  const Body k = random_body(5);
  const Body l = scale(translate(k, {0.07, -0.03}), 2.0);
  const PositionedPair p = dilation_position(k, l);
  CHECK(p.report.r == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(p.report.R == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(p.report.max_violation < 1e-10);
  const HomothetyFit fit = homothety_detect(p.k, p.l);
  CHECK(fit.v.norm() < 1e-8);  // K' = 0.5 L' about the origin
}

TEST_CASE("is_dilation_position") {
  CHECK(is_dilation_position(disk(2.0), disk(1.0)));
  // 2 h_L(0) = 3.8 > 2 = h_K(0).
  CHECK_FALSE(is_dilation_position(disk(2.0), translate(disk(1.0), {0.9, 0.0})));
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logmink/body.hpp"
#include "logmink/errors.hpp"
#include "logmink/measures.hpp"

using namespace logmink;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const PeriodicSamples& a, const PeriodicSamples& b) {
  return (a - b).map([](double x) { return std::abs(x); }).max();
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::InvalidArgument;
}

Body p01(int n = 64) { return from_trig({1.0, {0.0, 0.1}, {0.0, 0.0}}, n); }

}  // namespace

TEST_CASE("from_trig") {
  const Body b = from_trig({1.0, {}, {}}, 64);
  CHECK(b.f().map([](double x) { return std::abs(x - 1.0); }).max() < 1e-14);

  // h = 1 + 0.1 cos 2t gives f = 1 - 0.3 cos 2t.
  const Body p = p01();
  CHECK(p.f().min() == doctest::Approx(0.7).epsilon(1e-13));
  for (int j = 0; j < p.size(); ++j) {
    CHECK(std::abs(p.f()[j] - (1.0 - 0.3 * std::cos(2 * p.grid().node(j)))) < 1e-13);
  }

  CHECK(kind_of([] { from_trig({1.0, {0.0, 0.4}, {0.0, 0.0}}, 64); }) == ErrorKind::NotConvex);
  CHECK(kind_of([] { from_trig({-0.5, {}, {}}, 64); }) == ErrorKind::OriginOutside);
  try {
    from_trig({1.0, {0.0, 0.4}, {0.0, 0.0}}, 64);
  } catch (const GeometryError& e) {
    // min(1 - 1.2 cos 2t) = -0.2 at t = 0.
    CHECK(std::string(e.what()).find("-0.2") != std::string::npos);
    CHECK(std::string(e.what()).find("theta = 0") != std::string::npos);
  }
}

TEST_CASE("disk and ellipse") {
  const Body b = disk(1.0);
  CHECK(b.h().min() == 1.0);
  CHECK(b.h().max() == 1.0);

  const Body d = disk(2.0, {0.5, 0.0});
  CHECK(d.h()[0] == doctest::Approx(2.5));
  CHECK(d.h()[d.size() / 2] == doctest::Approx(1.5));
  CHECK(kind_of([] { disk(1.0, {2.0, 0.0}); }) == ErrorKind::OriginOutside);

  const Body e = ellipse(2.0, 1.0, {}, 256);
  CHECK(e.h()[0] == doctest::Approx(2.0));
  CHECK(e.h()[64] == doctest::Approx(1.0));
  CHECK(std::abs(volume(e) - 2.0 * kPi) < 1e-10);
  CHECK(max_abs_diff(ellipse(1.0, 1.0).h(), disk(1.0).h()) < 1e-15);
  CHECK(kind_of([] { ellipse(2.0, 1.0, {2.5, 0.0}); }) == ErrorKind::OriginOutside);
}

TEST_CASE("random_body") {
  const Body ball = random_body(42, {.harmonics = 0});
  CHECK(ball.h().map([](double x) { return std::abs(x - 1.0); }).max() == 0.0);

  const Body a = random_body(7, {.harmonics = 8, .decay = 2.0, .margin = 0.2, .n = 256});
  const Body b = random_body(7, {.harmonics = 8, .decay = 2.0, .margin = 0.2, .n = 256});
  CHECK(std::equal(a.h().values().begin(), a.h().values().end(), b.h().values().begin()));
  CHECK(a.f().min() >= 0.2);
  CHECK(a.h().min() >= 0.2);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Body r = random_body(seed, {.harmonics = 12, .decay = 1.5, .margin = 0.3});
    CHECK(r.f().min() >= 0.3);
    CHECK(r.h().min() >= 0.3);
  }
}

TEST_CASE("translate and scale") {
  const Body k = random_body(3);
  const Body moved = translate(disk(1.0), {0.5, 0.0});
  CHECK(max_abs_diff(moved.h(), disk(1.0, {0.5, 0.0}).h()) < 1e-15);
  CHECK(max_abs_diff(translate(k, {}).h(), k.h()) == 0.0);
  // h'' amplifies round-off by up to (n/2)^2, so f agrees to about 1e-11.
  CHECK(max_abs_diff(translate(k, {0.1, -0.2}).f(), k.f()) < 1e-10);
  CHECK(kind_of([&] { translate(k, {5.0, 0.0}); }) == ErrorKind::OriginOutside);

  CHECK(max_abs_diff(scale(disk(1.0), 2.0).h(), disk(2.0).h()) < 1e-15);
  const Body big = scale(k, 3.0);
  CHECK(max_abs_diff(big.f(), k.f() * 3.0) <= 1e-10 * 3.0 * k.f().max());
  CHECK(volume(big) == doctest::Approx(9.0 * volume(k)).epsilon(1e-12));
  CHECK(max_abs_diff(scale(k, 1.0).h(), k.h()) == 0.0);
}

TEST_CASE("minkowski_sum") {
  const Body b = disk(1.0);
  CHECK(max_abs_diff(minkowski_sum(b, b).h(), disk(2.0).h()) < 1e-15);

  const Body k = random_body(11);
  const Body l = random_body(12);
  const Body m = random_body(13);
  CHECK(max_abs_diff(minkowski_sum(k, b).h(), k.h().map([](double x) { return x + 1.0; })) < 1e-15);
  CHECK(max_abs_diff(minkowski_sum(k, l).h(), minkowski_sum(l, k).h()) < 1e-12);
  CHECK(max_abs_diff(minkowski_sum(minkowski_sum(k, l), m).h(),
                     minkowski_sum(k, minkowski_sum(l, m)).h()) < 1e-12);
  CHECK(max_abs_diff(minkowski_sum(k, l).f(), k.f() + l.f()) < 1e-10);

  // Steiner polynomial for K + tB evaluated by quadrature on both sides.
  const double t = 0.5;
  const double lhs = volume(minkowski_sum(k, scale(b, t)));
  const double rhs = volume(k) + 2.0 * t * mixed_volume(k, b) + t * t * kPi;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

  // Mixed grids land on the finer one.
  CHECK(minkowski_sum(disk(1.0, {}, 64), disk(1.0, {}, 128)).size() == 128);
}

TEST_CASE("polygon_volume") {
  using P = PolygonBody::Point;
  CHECK(polygon_volume(PolygonBody({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}})) ==
        doctest::Approx(1.0));
  CHECK(polygon_volume(PolygonBody({{-0.25, -0.25}, {0.75, -0.25}, {-0.25, 0.75}})) ==
        doctest::Approx(0.5));

  for (int m : {6, 64, 1024}) {
    std::vector<P> v;
    const double rad = 1.0 / std::cos(kPi / m);
    for (int i = 0; i < m; ++i) {
      const double a = (2.0 * i + 1.0) * kPi / m;
      v.push_back({rad * std::cos(a), rad * std::sin(a)});
    }
    CHECK(polygon_volume(PolygonBody(v)) == doctest::Approx(m * std::tan(kPi / m)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(PolygonBody({{0, 0}, {1, 0}}), GeometryError);
  CHECK_THROWS_AS(PolygonBody({{1, 1}, {2, 1}, {1, 2}}), GeometryError);
}

TEST_CASE("log_combination") {
  const Body k = random_body(5);
  const double vk = volume(k);

  // Wulff of h_K circumscribes K; more nested halfplanes only shrink it.
  double previous = std::numeric_limits<double>::infinity();
  for (int m : {64, 128, 256, 512, 1024, 2048}) {
    const double a = polygon_volume(log_combination(k, k, 0.0, m));
    CHECK(a >= vk);
    CHECK(a <= previous);
    previous = a;
  }
  CHECK(previous == doctest::Approx(vk).epsilon(1e-5));

  const Body l = random_body(6);
  for (int m : {256, 1024}) {
    CHECK(polygon_volume(log_combination(k, l, 0.3, m)) >=
          polygon_volume(log_combination(k, l, 0.3, 2 * m)));
  }

  // K = L: the geometric mean is h_K itself for every lambda.
  const double same = polygon_volume(log_combination(k, k, 0.7, 4096));
  CHECK(same == doctest::Approx(vk).epsilon(1e-5));

  // 2B and B combine to the radius sqrt(2) disk: a regular circumscribed m-gon.
  const int m = 1024;
  const double a = polygon_volume(log_combination(disk(2.0), disk(1.0), 0.5, m));
  CHECK(a == doctest::Approx(2.0 * m * std::tan(kPi / m)).epsilon(1e-12));

  CHECK(log_combination(k, l, 0.5).vertices().size() <= static_cast<std::size_t>(4 * k.size()));
  CHECK_THROWS_AS(log_combination(k, l, 1.5, 256), GeometryError);
  CHECK_THROWS_AS(log_combination(k, l, 0.5, 32), GeometryError);
}

TEST_CASE("homothety_detect") {
  const Body l = random_body(21);
  const Body k = scale(translate(l, {0.3, 0.0}), 2.0);
  const HomothetyFit fit = homothety_detect(k, l, 1e-10);
  CHECK(fit.homothetic);
  CHECK(fit.t == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.v.x == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(std::abs(fit.v.y) < 1e-10);

  const HomothetyFit self = homothety_detect(l, l);
  CHECK(self.homothetic);
  CHECK(self.t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(self.v.norm() < 1e-12);

  // The best fit of an ellipse by disks leaves a cos 2t residual.
  const HomothetyFit e = homothety_detect(ellipse(2.0, 1.0), disk(1.0), 1e-6);
  CHECK_FALSE(e.homothetic);
  CHECK(e.max_residual > 0.1);
}

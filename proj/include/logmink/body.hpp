#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logmink/grid.hpp"

namespace logmink {

// Strict-convexity margin for h + h'', in units of max(h).
inline constexpr double kDefaultConvexityMargin = 1e-6;

struct Vector2 {
  double x = 0.0;
  double y = 0.0;

  // Inner product with the unit normal u(theta) = (cos theta, sin theta).
  double along(double theta) const { return x * std::cos(theta) + y * std::sin(theta); }

  friend Vector2 operator+(Vector2 a, Vector2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vector2 operator-(Vector2 a, Vector2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vector2 operator*(double s, Vector2 a) { return {s * a.x, s * a.y}; }
  double norm() const { return std::hypot(x, y); }
};

// h(theta) = a0 + sum_k cos_coeffs[k-1] cos(k theta) + sin_coeffs[k-1] sin(k theta).
struct TrigSeries {
  double a0 = 1.0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
};

// A smooth strictly convex planar body containing the origin in its interior,
// stored as its sampled support function h. The curvature radius f = h + h''
// is always derived from h, never set on its own.
class Body {
 public:
  // Throws OriginOutside if min h <= 0 and NotConvex if min f falls below
  // convexity_margin * max h.
  Body(PeriodicSamples h, std::string name = "",
       double convexity_margin = kDefaultConvexityMargin);

  const PeriodicSamples& h() const { return h_; }
  const PeriodicSamples& f() const { return f_; }
  const AngleGrid& grid() const { return h_.grid(); }
  int size() const { return h_.size(); }
  const std::string& name() const { return name_; }

  Body renamed(std::string name) const;
  // Same body on another grid by trigonometric interpolation of h.
  Body resampled(int n) const;

 private:
  PeriodicSamples h_;
  PeriodicSamples f_;
  std::string name_;
};

// Convex polygon, vertices counterclockwise, origin strictly inside.
class PolygonBody {
 public:
  struct Point {
    double x;
    double y;
  };

  explicit PolygonBody(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  std::vector<Point> vertices_;
};

Body from_trig(const TrigSeries& series, int n = kDefaultGridSize, std::string name = "trig");
Body disk(double radius, Vector2 center = {}, int n = kDefaultGridSize);
Body ellipse(double a, double b, Vector2 center = {}, int n = kDefaultGridSize);

struct RandomBodyParams {
  int harmonics = 8;
  double decay = 2.0;
  double margin = 0.2;
  int n = kDefaultGridSize;
};

// Deterministic in seed. Coefficients of modes 2..harmonics are drawn
// uniformly from [-1, 1] * k^-decay around a0 = 1, then the perturbation is
// shrunk until min h and min f are both at least margin.
Body random_body(std::uint64_t seed, const RandomBodyParams& params = {});

Body translate(const Body& body, Vector2 v);
Body scale(const Body& body, double t);
Body minkowski_sum(const Body& k, const Body& l);

// Brings two bodies onto the finer of their grids.
std::pair<Body, Body> on_common_grid(const Body& k, const Body& l);

// Wulff body of h_K^(1-lambda) h_L^lambda, built by clipping a bounding box
// against m uniformly spaced halfplanes. For m == 0 the default 4n is used.
PolygonBody log_combination(const Body& k, const Body& l, double lambda, int m = 0);
double polygon_volume(const PolygonBody& p);

struct HomothetyFit {
  bool homothetic;
  double t;
  Vector2 v;
  double max_residual;
};

// Least-squares fit h_K ~ t h_L + v.u; homothetic iff the max residual is
// within tol * max(h_K).
HomothetyFit homothety_detect(const Body& k, const Body& l, double tol = 1e-6);

}  // namespace logmink

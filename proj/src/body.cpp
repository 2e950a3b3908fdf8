#include "logmink/body.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "logmink/errors.hpp"

namespace logmink {

namespace {

std::string describe_min(const char* what, const PeriodicSamples& s) {
  std::ostringstream os;
  os.precision(12);
  const int j = s.argmin();
  os << "min(" << what << ") = " << s[j] << " at theta = " << s.grid().node(j);
  return os.str();
}

PeriodicSamples curvature_radius(const PeriodicSamples& h) {
  return h + fourier_derivatives(h).second;
}

PeriodicSamples shift_samples(const PeriodicSamples& h, Vector2 v) {
  std::vector<double> out(h.values().begin(), h.values().end());
  for (int j = 0; j < h.size(); ++j) out[j] += v.along(h.grid().node(j));
  return PeriodicSamples(h.grid(), std::move(out));
}

}  // namespace

Body::Body(PeriodicSamples h, std::string name, double convexity_margin)
    : h_(std::move(h)), f_(curvature_radius(h_)), name_(std::move(name)) {
  if (h_.min() <= 0.0) {
    throw GeometryError(ErrorKind::OriginOutside, describe_min("h", h_) + " <= 0");
  }
  const double floor = convexity_margin * h_.max();
  if (f_.min() < floor) {
    std::ostringstream os;
    os << describe_min("h+h''", f_) << " < " << floor;
    throw GeometryError(ErrorKind::NotConvex, os.str());
  }
}

Body Body::renamed(std::string name) const {
  Body copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Body Body::resampled(int n) const {
  if (n == size()) return *this;
  return Body(resample(h_, n), name_);
}

PolygonBody::PolygonBody(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t m = vertices_.size();
  if (m < 3) {
    throw GeometryError(ErrorKind::DegeneratePolygon,
                        "polygon has " + std::to_string(m) + " vertices");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % m];
    const Point& c = vertices_[(i + 2) % m];
    const double turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (!(turn > 0.0)) {
      throw GeometryError(ErrorKind::DegeneratePolygon,
                          "vertex " + std::to_string((i + 1) % m) + " is not strictly convex");
    }
    // Origin strictly left of every edge.
    if (!(a.x * b.y - a.y * b.x > 0.0)) {
      throw GeometryError(ErrorKind::OriginOutside, "origin not inside polygon");
    }
  }
}

Body from_trig(const TrigSeries& series, int n, std::string name) {
  if (series.cos_coeffs.size() != series.sin_coeffs.size()) {
    throw GeometryError(ErrorKind::InvalidArgument, "cos and sin coefficient counts differ");
  }
  const AngleGrid grid(n);
  auto h = PeriodicSamples::sample(grid, [&](double t) {
    double v = series.a0;
    for (std::size_t i = 0; i < series.cos_coeffs.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      v += series.cos_coeffs[i] * std::cos(k * t) + series.sin_coeffs[i] * std::sin(k * t);
    }
    return v;
  });
  return Body(std::move(h), std::move(name));
}

Body disk(double radius, Vector2 center, int n) {
  if (!(radius > 0.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "disk radius must be positive");
  }
  if (center.norm() >= radius) {
    throw GeometryError(ErrorKind::OriginOutside, "disk center at distance " +
                                                      std::to_string(center.norm()) +
                                                      " >= radius");
  }
  const AngleGrid grid(n);
  return Body(PeriodicSamples::sample(grid, [&](double t) { return radius + center.along(t); }),
              "disk");
}

Body ellipse(double a, double b, Vector2 center, int n) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "ellipse semi-axes must be positive");
  }
  const double q = (center.x / a) * (center.x / a) + (center.y / b) * (center.y / b);
  if (q >= 1.0) throw GeometryError(ErrorKind::OriginOutside, "origin outside ellipse");
  const AngleGrid grid(n);
  return Body(PeriodicSamples::sample(grid,
                                      [&](double t) {
                                        const double c = std::cos(t);
                                        const double s = std::sin(t);
                                        return std::sqrt(a * a * c * c + b * b * s * s) +
                                               center.along(t);
                                      }),
              "ellipse");
}

Body random_body(std::uint64_t seed, const RandomBodyParams& params) {
  const AngleGrid grid(params.n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::vector<double> a, b;
  for (int k = 2; k <= params.harmonics; ++k) {
    const double amp = std::pow(static_cast<double>(k), -params.decay);
    a.push_back(unit(rng) * amp);
    b.push_back(unit(rng) * amp);
  }

  // Perturbation p of h and the matching perturbation q of h + h''.
  std::vector<double> p(static_cast<std::size_t>(params.n), 0.0);
  std::vector<double> q(p.size(), 0.0);
  for (int j = 0; j < params.n; ++j) {
    const double t = grid.node(j);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double k = static_cast<double>(i + 2);
      const double w = a[i] * std::cos(k * t) + b[i] * std::sin(k * t);
      p[j] += w;
      q[j] += (1.0 - k * k) * w;
    }
  }

  double shrink = 1.0;
  const double room = 1.0 - params.margin;
  for (const auto* pert : {&p, &q}) {
    const double lowest = *std::min_element(pert->begin(), pert->end());
    if (1.0 + shrink * lowest < params.margin) shrink = room / -lowest;
  }
  if (shrink < 1.0) shrink *= 1.0 - 1e-9;

  std::vector<double> h(p.size());
  for (std::size_t j = 0; j < h.size(); ++j) h[j] = 1.0 + shrink * p[j];
  return Body(PeriodicSamples(grid, std::move(h)), "random:" + std::to_string(seed));
}

Body translate(const Body& body, Vector2 v) {
  return Body(shift_samples(body.h(), v), body.name());
}

Body scale(const Body& body, double t) {
  if (!(t > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "scale factor must be positive");
  return Body(body.h() * t, body.name());
}

std::pair<Body, Body> on_common_grid(const Body& k, const Body& l) {
  const int n = std::max(k.size(), l.size());
  return {k.resampled(n), l.resampled(n)};
}

Body minkowski_sum(const Body& k, const Body& l) {
  auto [kk, ll] = on_common_grid(k, l);
  return Body(kk.h() + ll.h(), kk.name() + "+" + ll.name());
}

PolygonBody log_combination(const Body& k, const Body& l, double lambda, int m) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "lambda must lie in [0, 1]");
  }
  auto [kk, ll] = on_common_grid(k, l);
  if (m == 0) m = 4 * kk.size();
  if (m < 64 || m % 2 != 0) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "halfplane count must be even and >= 64, got " + std::to_string(m));
  }
  const PeriodicSamples hk = resample(kk.h(), m);
  const PeriodicSamples hl = resample(ll.h(), m);
  const PeriodicSamples w = hk.zip(hl, [lambda](double a, double b) {
    return std::pow(a, 1.0 - lambda) * std::pow(b, lambda);
  });

  using Point = PolygonBody::Point;
  const double box = 2.0 * w.max() + 1.0;
  std::vector<Point> poly{{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  std::vector<Point> next;
  for (int i = 0; i < m; ++i) {
    const double t = w.grid().node(i);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double bound = w[i];
    next.clear();
    const std::size_t count = poly.size();
    for (std::size_t j = 0; j < count; ++j) {
      const Point& p = poly[j];
      const Point& q = poly[(j + 1) % count];
      const double dp = p.x * c + p.y * s - bound;
      const double dq = q.x * c + q.y * s - bound;
      if (dp <= 0.0) next.push_back(p);
      if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
        const double a = dp / (dp - dq);
        next.push_back({p.x + a * (q.x - p.x), p.y + a * (q.y - p.y)});
      }
    }
    poly.swap(next);
    if (poly.size() < 3) break;
  }

  // Drop duplicate and collinear vertices left by lines through existing vertices.
  const double eps = 1e-14 * box * box;
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t j = 0; j < poly.size() && poly.size() >= 3; ++j) {
      const std::size_t cnt = poly.size();
      const Point& a = poly[(j + cnt - 1) % cnt];
      const Point& b = poly[j];
      const Point& c = poly[(j + 1) % cnt];
      const double turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
      if (turn <= eps) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
  }
  return PolygonBody(std::move(poly));
}

double polygon_volume(const PolygonBody& p) {
  const auto& v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * std::abs(twice);
}

HomothetyFit homothety_detect(const Body& k, const Body& l, double tol) {
  auto [kk, ll] = on_common_grid(k, l);
  const int n = kk.size();
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) {
    const double t = kk.grid().node(j);
    a(j, 0) = ll.h()[j];
    a(j, 1) = std::cos(t);
    a(j, 2) = std::sin(t);
    rhs(j) = kk.h()[j];
  }
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(rhs);
  const double residual = (a * sol - rhs).cwiseAbs().maxCoeff();
  return {residual <= tol * kk.h().max(), sol(0), {sol(1), sol(2)}, residual};
}

}  // namespace logmink

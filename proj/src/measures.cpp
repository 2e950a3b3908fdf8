#include "logmink/measures.hpp"

#include <algorithm>
#include <cmath>

#include "logmink/errors.hpp"

namespace logmink {

double volume(const Body& k) { return 0.5 * integrate(k.h() * k.f()); }

double surface_area(const Body& k) { return integrate(k.f()); }

double mixed_volume(const Body& k, const Body& l) {
  auto [kk, ll] = on_common_grid(k, l);
  const double kl = 0.5 * integrate(kk.h() * ll.f());
  const double lk = 0.5 * integrate(ll.h() * kk.f());
  return 0.5 * (kl + lk);
}

double mixed_volume_asymmetry(const Body& k, const Body& l) {
  auto [kk, ll] = on_common_grid(k, l);
  return std::abs(0.5 * integrate(kk.h() * ll.f()) - 0.5 * integrate(ll.h() * kk.f()));
}

PeriodicSamples curvature(const Body& k) {
  return k.f().map([](double f) { return 1.0 / f; });
}

PeriodicSamples relative_curvature_radius(const Body& k, const Body& l) {
  auto [kk, ll] = on_common_grid(k, l);
  return kk.f() / ll.f();
}

ConeVolumeDensity cone_volume(const Body& k) {
  PeriodicSamples density = (k.h() * k.f()) * 0.5;
  const double total = integrate(density);
  return {std::move(density), total};
}

double cone_volume_distance(const Body& k, const Body& l) {
  auto [kk, ll] = on_common_grid(k, l);
  const PeriodicSamples gap = cone_volume(kk).density - cone_volume(ll).density;
  return gap.map([](double v) { return std::abs(v); }).max();
}

SteinerRoots steiner_roots(const Body& k, const Body& l) {
  const double vk = volume(k);
  const double vl = volume(l);
  const double vkl = mixed_volume(k, l);
  double disc = vkl * vkl - vk * vl;
  const double tol = kDiscriminantTolerance * vk * vl;
  if (disc < -tol) {
    throw GeometryError(ErrorKind::NegativeDiscriminant,
                        "V(K,L)^2 - V(K)V(L) = " + std::to_string(disc));
  }
  if (std::abs(disc) <= tol) disc = 0.0;
  const double root = std::sqrt(disc);
  return {(-vkl + root) / vl, (-vkl - root) / vl, disc};
}

}  // namespace logmink

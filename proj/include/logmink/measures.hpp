#pragma once

#include "logmink/body.hpp"
#include "logmink/grid.hpp"

namespace logmink {

// Cone-volume measure dV_K = (1/2) h f dtheta.
struct ConeVolumeDensity {
  PeriodicSamples density;
  double total;
};

// Roots t1 >= t2 of V(K + tL) = V(K) + 2 V(K,L) t + V(L) t^2.
struct SteinerRoots {
  double t1;
  double t2;
  double discriminant;  // V(K,L)^2 - V(K) V(L), after clamping
};

// Relative window, in units of V(K) V(L), inside which the discriminant is
// treated as zero.
inline constexpr double kDiscriminantTolerance = 1e-10;

double volume(const Body& k);
double surface_area(const Body& k);

// Planar mixed volume, averaged over both quadrature orders.
double mixed_volume(const Body& k, const Body& l);
// |V(K,L) - V(L,K)| between the two quadrature orders; a health metric.
double mixed_volume_asymmetry(const Body& k, const Body& l);

PeriodicSamples curvature(const Body& k);
// rho_{K,L} = f_K / f_L = kappa_L / kappa_K.
PeriodicSamples relative_curvature_radius(const Body& k, const Body& l);

ConeVolumeDensity cone_volume(const Body& k);
double cone_volume_distance(const Body& k, const Body& l);

SteinerRoots steiner_roots(const Body& k, const Body& l);

}  // namespace logmink

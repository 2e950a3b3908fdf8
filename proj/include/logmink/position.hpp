#pragma once

#include <cstdint>
#include <vector>

#include "logmink/body.hpp"

namespace logmink {

struct RadiusSolution {
  double value;                       // r(K,L) or R(K,L)
  Vector2 witness;                    // optimal translation
  std::vector<double> active_angles;  // grid normals where the constraint is tight
};

struct DilationReport {
  double r;
  double R;
  Vector2 v;        // translation applied to L
  Vector2 k_shift;  // translation applied to K (moves the origin)
  double max_violation;
  double origin_margin;  // min over theta of min(h_K', h_L')
};

struct PositionOptions {
  std::uint64_t seed = 0;
  double tol_feas = 1e-8;
  double tol_active = 1e-9;  // relative to max h_K
};

struct PositionedPair {
  Body k;
  Body l;
  DilationReport report;
};

// r(K,L) = max{t : x + tL in K}, containment enforced at the grid normals.
RadiusSolution inradius(const Body& k, const Body& l, const PositionOptions& options = {});
// R(K,L) = min{t : y + tL contains K}.
RadiusSolution outradius(const Body& k, const Body& l, const PositionOptions& options = {});

// Translates K and L so that r(L') <= K' <= R(L') holds about the origin.
// With the origin held fixed the two containments pin the translation of L
// twice over, so the origin is moved as well: the shifts (a, v) minimize the
// maximum violation of
//   r (h_L + v.u) <= h_K + a.u <= R (h_L + v.u)
// over the grid. For homothets (r == R) v is fixed at zero.
//
// Throws Infeasible if the minimized violation exceeds tol_feas and
// OriginOutside if the origin does not end up inside both bodies.
PositionedPair dilation_position(const Body& k, const Body& l, const PositionOptions& options = {});

// Largest of r h_L - h_K and h_K - R h_L over the grid nodes; <= 0 when
// r L <= K <= R L holds at every node.
double containment_violation(const Body& k, const Body& l, double r, double big_r);

bool is_dilation_position(const Body& k, const Body& l, double tol = 1e-8,
                          const PositionOptions& options = {});

}  // namespace logmink

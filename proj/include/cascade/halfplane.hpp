#pragma once

#include <vector>

#include "cascade/leaves.hpp"

namespace cascade {

// Exact harmonic measure in the upper half plane via subtended angles.
// Similarity-invariant facts are certified by exact rational slope pairs; the
// transcendental angle values are computed in doubles for reporting only.

struct BasePoint {
  Rat x;       // real coordinate
  Rat height;  // > 0
};

// Exact certificate for the angle subtended by [a, b]: the slopes
// (x - a)/h and (x - b)/h. Equal certificates mean equal harmonic measure.
struct AngleCert {
  Rat slope_a, slope_b;
  bool b_infinite = false;  // boundary set is the ray [a, +inf)

  friend bool operator==(const AngleCert& p, const AngleCert& q) {
    return p.b_infinite == q.b_infinite && p.slope_a == q.slope_a &&
           (p.b_infinite || p.slope_b == q.slope_b);
  }
};

struct HarmonicResult {
  double omega = 0;  // harmonic measure = angle / pi
  AngleCert cert;
};

HarmonicResult harmonic_measure_interval(const BasePoint& z, const Rat& a, const Rat& b);
HarmonicResult harmonic_measure_ray(const BasePoint& z, const Rat& a);  // [a, +inf)

// tan of the angle subtended by [a, b] at z, exact; nullopt when the angle
// is exactly pi/2.
std::optional<Rat> subtended_tan(const BasePoint& z, const Rat& a, const Rat& b);

// Orientation-normalized certificate of (z_J, E_J) for a standard interval:
// (d_near/h, d_far/h) where d_near/d_far are the distances from the midpoint
// of J to the tip's ends and h = alpha |J|. Identical across all standard
// intervals by similarity.
struct LeafCert {
  Rat near_slope, far_slope;
  friend bool operator==(const LeafCert& p, const LeafCert& q) {
    return p.near_slope == q.near_slope && p.far_slope == q.far_slope;
  }
};
LeafCert standard_leaf_cert(const WhitneyInterval& J, const WhitneyParams& params,
                            const Rat& alpha);

// True iff all sampled standard intervals share one exact certificate.
bool standard_leaf_invariance(const std::vector<WhitneyInterval>& sample,
                              const WhitneyParams& params, const Rat& alpha);

// Harmonic measures omega(z_Jc, V_j, U) for j = 1..max_j from the basepoint
// at height alpha |J_c| above the host-gap midpoint.
std::vector<double> vj_angle_decay(const WhitneyInterval& Jc, const WhitneyParams& params,
                                   const Rat& alpha, int max_j);

// Hyperbolic distance from the disc origin to a point at radius r in [0,1).
double hyperbolic_distance_origin(const Rat& r);

}  // namespace cascade

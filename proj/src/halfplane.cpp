#include "cascade/halfplane.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

namespace {

void require_upper(const BasePoint& z) {
  if (z.height.sgn() <= 0) throw std::invalid_argument("basepoint must lie in the open upper half plane");
}

}  // namespace

HarmonicResult harmonic_measure_interval(const BasePoint& z, const Rat& a, const Rat& b) {
  require_upper(z);
  HarmonicResult r;
  r.cert.slope_a = (z.x - a) / z.height;
  r.cert.slope_b = (z.x - b) / z.height;
  if (a == b) {
    r.omega = 0;
    return r;
  }
  double ta = std::atan(((b - z.x) / z.height).to_double());
  double tb = std::atan(((a - z.x) / z.height).to_double());
  r.omega = (ta - tb) / M_PI;
  return r;
}

HarmonicResult harmonic_measure_ray(const BasePoint& z, const Rat& a) {
  require_upper(z);
  HarmonicResult r;
  r.cert.slope_a = (z.x - a) / z.height;
  r.cert.b_infinite = true;
  double tb = std::atan(((a - z.x) / z.height).to_double());
  r.omega = (M_PI / 2 - tb) / M_PI;
  return r;
}

std::optional<Rat> subtended_tan(const BasePoint& z, const Rat& a, const Rat& b) {
  require_upper(z);
  Rat ua = (a - z.x) / z.height, ub = (b - z.x) / z.height;
  Rat den = Rat(1) + ua * ub;
  if (den.is_zero()) return std::nullopt;
  return (ub - ua) / den;
}

LeafCert standard_leaf_cert(const WhitneyInterval& J, const WhitneyParams& params,
                            const Rat& alpha) {
  if (!J.is_standard()) throw std::invalid_argument("standard_leaf_cert: standard J required");
  if (alpha.sgn() <= 0 || alpha > Rat(1, 2))
    throw std::invalid_argument("standard_leaf_cert: alpha in (0, 1/2] required");
  PalmTip t = tip(J, params);
  Rat mid = J.geometry.midpoint();
  Rat h = alpha * J.euclid_length();
  Rat d1 = (t.geometry.lo - mid).abs(), d2 = (t.geometry.hi - mid).abs();
  LeafCert c;
  c.near_slope = min(d1, d2) / h;
  c.far_slope = max(d1, d2) / h;
  return c;
}

bool standard_leaf_invariance(const std::vector<WhitneyInterval>& sample,
                              const WhitneyParams& params, const Rat& alpha) {
  if (sample.empty()) return true;
  LeafCert ref = standard_leaf_cert(sample[0], params, alpha);
  for (const auto& j : sample)
    if (!(standard_leaf_cert(j, params, alpha) == ref)) return false;
  return true;
}

std::vector<double> vj_angle_decay(const WhitneyInterval& Jc, const WhitneyParams& params,
                                   const Rat& alpha, int max_j) {
  if (Jc.kind != WhitneyKind::Central)
    throw std::invalid_argument("vj_angle_decay: central interval required");
  BasePoint z{Jc.geometry.midpoint(), alpha * Jc.euclid_length()};
  auto bands = vj_bands(Jc, params, max_j);
  std::vector<double> out;
  out.reserve(bands.size());
  for (const auto& b : bands) {
    double w = harmonic_measure_interval(z, b.left.lo, b.left.hi).omega +
               harmonic_measure_interval(z, b.right.lo, b.right.hi).omega;
    out.push_back(w);
  }
  return out;
}

double hyperbolic_distance_origin(const Rat& r) {
  Rat a = r.abs();
  if (a >= Rat(1)) throw std::domain_error("hyperbolic_distance_origin: |r| < 1 required");
  return std::log(((Rat(1) + a) / (Rat(1) - a)).to_double());
}

}  // namespace cascade

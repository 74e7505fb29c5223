#include "cascade/cantor.hpp"

#include <set>
#include <stdexcept>

namespace cascade {

WhitneyParams::WhitneyParams(int n) : N(n) {
  if (n < 2) throw std::invalid_argument("WhitneyParams: N must be >= 2");
  sigma = Rat(1) / (Rat(2) * Rat::pow3(n + 2));
}

Rat WhitneyInterval::euclid_length() const {
  if (kind == WhitneyKind::Infinity)
    throw std::logic_error("euclid_length: infinity interval");
  return geometry.length();
}

Rat dist_to_cantor(const Rat& x) {
  if (x < Rat(0)) return -x;
  if (x > Rat(1)) return x - Rat(1);
  // Zoom into thirds; if x ever lands strictly inside a middle third the
  // distance is read off the gap, scaled back. Points of K that are not
  // construction endpoints cycle (their orbit under x -> 3x mod the chart is
  // eventually periodic with denominator-bounded state), so a revisit means
  // x is in K.
  Rat y = x;
  Rat scale(1);
  std::set<mpq_class> seen;
  const Rat third(1, 3), two_thirds(2, 3);
  for (;;) {
    if (y == Rat(0) || y == Rat(1) || y == third || y == two_thirds) return Rat(0);
    if (y > third && y < two_thirds) {
      return scale * min(y - third, two_thirds - y);
    }
    if (!seen.insert(y.raw()).second) return Rat(0);
    scale /= Rat(3);
    if (y < third) {
      y *= Rat(3);
    } else {
      y = y * Rat(3) - Rat(2);
    }
  }
}

namespace {

// Does the closed construction interval c meet iv's K-part? Both iv endpoints
// are known to lie outside K, so the descent chains at the endpoints die in
// gaps and the recursion terminates.
bool construction_meets(const RInterval& c, const RInterval& iv) {
  if (c.hi < iv.lo || c.lo > iv.hi) return false;
  if (iv.lo <= c.lo && c.hi <= iv.hi) return true;  // whole K-piece inside
  Rat third = c.length() / Rat(3);
  return construction_meets(RInterval(c.lo, c.lo + third), iv) ||
         construction_meets(RInterval(c.hi - third, c.hi), iv);
}

}  // namespace

Rat dist_to_cantor(const RInterval& iv) {
  Rat dl = dist_to_cantor(iv.lo);
  Rat dr = dist_to_cantor(iv.hi);
  if (dl.is_zero() || dr.is_zero()) return Rat(0);
  if (!(iv.hi < Rat(0) || iv.lo > Rat(1)) &&
      construction_meets(RInterval(Rat(0), Rat(1)), iv))
    return Rat(0);
  // iv lies in one gap component (or beyond [0,1]); dist is monotone toward
  // the nearest end, so the minimum is at an endpoint of iv.
  return min(dl, dr);
}

namespace {

void collect_gaps(const RInterval& c, int level, int max_level, std::vector<std::vector<Gap>>& by_level) {
  if (level >= max_level) return;
  Rat third = c.length() / Rat(3);
  RInterval mid(c.lo + third, c.hi - third, false, false);
  by_level[level + 1].push_back(Gap{mid, level + 1});
  collect_gaps(RInterval(c.lo, c.lo + third), level + 1, max_level, by_level);
  collect_gaps(RInterval(c.hi - third, c.hi), level + 1, max_level, by_level);
}

}  // namespace

std::vector<Gap> gaps(int max_level) {
  if (max_level < 1) throw std::invalid_argument("gaps: max_level >= 1 required");
  std::vector<std::vector<Gap>> by_level(max_level + 1);
  collect_gaps(RInterval(Rat(0), Rat(1)), 0, max_level, by_level);
  std::vector<Gap> out;
  for (int l = 1; l <= max_level; ++l)
    for (auto& g : by_level[l]) out.push_back(std::move(g));
  return out;
}

std::optional<int> construction_interval_of(const RInterval& x) {
  if (x.lo < Rat(0) || x.hi > Rat(1)) return std::nullopt;
  auto e = x.length().log3_exact();
  if (!e || *e > 0) return std::nullopt;
  int level = static_cast<int>(-*e);
  // Left endpoint must be sum of digits in {0,2} over 3^-1..3^-level.
  Rat scaled = x.lo * Rat::pow3(level);
  if (scaled.den() != 1) return std::nullopt;
  mpz_class n = scaled.num();
  if (n < 0) return std::nullopt;
  for (int i = 0; i < level; ++i) {
    unsigned long digit = mpz_fdiv_ui(n.get_mpz_t(), 3);
    if (digit == 1) return std::nullopt;
    n /= 3;
  }
  if (n != 0) return std::nullopt;
  return level;
}

bool is_gap(const RInterval& iv) {
  if (!(iv.lo >= Rat(0) && iv.hi <= Rat(1))) return false;
  auto e = iv.length().log3_exact();
  if (!e || *e > -1) return false;
  Rat len = iv.length();
  // A gap is the open middle third of the construction interval one level up.
  return construction_interval_of(RInterval(iv.lo - len, iv.hi + len)).has_value();
}

int gap_level(const RInterval& iv) {
  auto e = iv.length().log3_exact();
  if (!e || !is_gap(iv)) throw std::invalid_argument("gap_level: not a gap of K");
  return static_cast<int>(-*e);
}

RInterval whitney_raw(const RInterval& L, int n) {
  if (n == 0) throw std::invalid_argument("whitney_raw: n != 0 required");
  Rat half = L.length() / Rat(2);
  if (n > 0) {
    return RInterval(L.hi - Rat::pow3(-n + 1) * half, L.hi - Rat::pow3(-n) * half);
  }
  int m = -n;
  return RInterval(L.lo + Rat::pow3(-m) * half, L.lo + Rat::pow3(-m + 1) * half);
}

WhitneyInterval central_of_gap(const RInterval& L, const WhitneyParams& params) {
  int l = gap_level(L);
  Rat off = Rat::pow3(-params.N) * L.length() / Rat(2);
  WhitneyInterval w;
  w.kind = WhitneyKind::Central;
  w.geometry = RInterval(L.lo + off, L.hi - off);
  w.host_gap = L;
  w.nominal_exp = -(l + 1);  // |J_c| = |L|/3 by convention
  return w;
}

WhitneyInterval standard_of_gap(const RInterval& L, int n, const WhitneyParams& params) {
  int l = gap_level(L);
  if (std::abs(n) < params.N + 1)
    throw std::invalid_argument("standard_of_gap: |n| >= N+1 required");
  WhitneyInterval w;
  w.kind = WhitneyKind::Standard;
  w.index = n;
  w.geometry = whitney_raw(L, n);
  w.host_gap = L;
  w.nominal_exp = -(std::abs(n) + l);
  return w;
}

WhitneyInterval infinity_interval(const WhitneyParams& params) {
  WhitneyInterval w;
  w.kind = WhitneyKind::Infinity;
  w.cof = CofiniteInterval(RInterval(-params.sigma, Rat(1) + params.sigma, false, false));
  w.host_gap = RInterval(Rat(0), Rat(1), false, false);
  w.host_unbounded = true;
  w.nominal_exp = -1;  // |J_inf| = 1/3 by convention
  return w;
}

WhitneyInterval standard_of_unbounded(int n, const WhitneyParams& params) {
  if (std::abs(n) < params.N + 3)
    throw std::invalid_argument("standard_of_unbounded: |n| >= N+3 required");
  WhitneyInterval w;
  w.kind = WhitneyKind::Standard;
  w.index = n;
  int m = std::abs(n);
  Rat a = Rat::pow3(-m + 1) / Rat(2), b = Rat::pow3(-m) / Rat(2);
  if (n > 0) {
    w.geometry = RInterval(-a, -b);
  } else {
    w.geometry = RInterval(Rat(1) + b, Rat(1) + a);
  }
  w.host_gap = RInterval(Rat(0), Rat(1), false, false);
  w.host_unbounded = true;
  w.nominal_exp = -m;
  return w;
}

std::vector<WhitneyInterval> whitney_of_gap(const RInterval& L, const WhitneyParams& params,
                                            int max_index) {
  if (!is_gap(L)) throw std::invalid_argument("whitney_of_gap: L is not a gap of K");
  if (max_index < params.N + 1)
    throw std::invalid_argument("whitney_of_gap: max_index >= N+1 required");
  std::vector<WhitneyInterval> out;
  out.push_back(central_of_gap(L, params));
  for (int n = params.N + 1; n <= max_index; ++n) {
    out.push_back(standard_of_gap(L, -n, params));
    out.push_back(standard_of_gap(L, n, params));
  }
  return out;
}

std::vector<WhitneyInterval> whitney_of_unbounded(const WhitneyParams& params, int max_index) {
  if (max_index < params.N + 3)
    throw std::invalid_argument("whitney_of_unbounded: max_index >= N+3 required");
  std::vector<WhitneyInterval> out;
  out.push_back(infinity_interval(params));
  for (int n = params.N + 3; n <= max_index; ++n) {
    out.push_back(standard_of_unbounded(n, params));
    out.push_back(standard_of_unbounded(-n, params));
  }
  return out;
}

}  // namespace cascade

#include "cascade/leaves.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

Rat PalmTip::length() const {
  if (cofinite) throw std::logic_error("PalmTip::length: cofinite tip");
  return geometry.length();
}

PalmTip tip(const WhitneyInterval& J, const WhitneyParams& params) {
  PalmTip t;
  t.owner = J;
  switch (J.kind) {
    case WhitneyKind::Infinity:
      t.geometry = RInterval(Rat(1, 9), Rat(8, 9));
      return t;
    case WhitneyKind::Central: {
      int l = gap_level(J.host_gap);
      Rat w = Rat::pow3(-l);
      t.cofinite = true;
      t.excluded = RInterval(J.host_gap.lo - w, J.host_gap.hi + w, false, false);
      return t;
    }
    case WhitneyKind::Standard:
      break;
  }
  const int N = params.N;
  if (std::abs(J.index) < N + 1)
    throw std::invalid_argument("tip: standard index below N+1 is amalgamated");
  if (J.host_unbounded) {
    // J_{N+k} in [-sigma, 0): tip is [3^-k, 3^-k+1]; mirrored on the right.
    int k = std::abs(J.index) - N;
    Rat u = Rat::pow3(-k), v = Rat::pow3(-k + 1);
    if (J.index > 0) {
      t.geometry = RInterval(u, v);
      t.gap_part = RInterval(u, Rat(2) * u);
      t.construction_part = RInterval(Rat(2) * u, v);
      t.gap_on_left = true;
    } else {
      t.geometry = RInterval(Rat(1) - v, Rat(1) - u);
      t.construction_part = RInterval(Rat(1) - v, Rat(1) - Rat(2) * u);
      t.gap_part = RInterval(Rat(1) - Rat(2) * u, Rat(1) - u);
      t.gap_on_left = false;
    }
    return t;
  }
  int l = gap_level(J.host_gap);
  int k = std::abs(J.index) - N;
  Rat u = Rat::pow3(-l - k), v = Rat::pow3(-l - k + 1);
  if (J.index > 0) {
    const Rat& b = J.host_gap.hi;
    t.geometry = RInterval(b + u, b + v);
    t.gap_part = RInterval(b + u, b + Rat(2) * u);
    t.construction_part = RInterval(b + Rat(2) * u, b + v);
    t.gap_on_left = true;
  } else {
    const Rat& a = J.host_gap.lo;
    t.geometry = RInterval(a - v, a - u);
    t.construction_part = RInterval(a - v, a - Rat(2) * u);
    t.gap_part = RInterval(a - Rat(2) * u, a - u);
    t.gap_on_left = false;
  }
  return t;
}

namespace {

// Append the whole (amalgamated) decomposition of gap G, floored.
void emit_gap_decomposition(const RInterval& G, const WhitneyParams& params, const Rat& floor,
                            std::vector<WhitneyInterval>& out) {
  if (floor.sgn() <= 0) throw std::invalid_argument("size_floor must be positive");
  Rat len = G.length();
  if ((Rat(1) - Rat::pow3(-params.N)) * len >= floor)
    out.push_back(central_of_gap(G, params));
  for (int n = params.N + 1;; ++n) {
    if (Rat::pow3(-n) * len < floor) break;
    out.push_back(standard_of_gap(G, -n, params));
    out.push_back(standard_of_gap(G, n, params));
  }
}

// Decompositions of every gap inside construction interval c, floored. The
// largest child this subtree can produce is the central of the mid gap, so
// recursion stops once that falls under the floor.
void emit_gaps_in(const RInterval& c, const WhitneyParams& params, const Rat& floor,
                  std::vector<WhitneyInterval>& out) {
  Rat third = c.length() / Rat(3);
  if ((Rat(1) - Rat::pow3(-params.N)) * third < floor) return;
  RInterval mid(c.lo + third, c.hi - third, false, false);
  emit_gap_decomposition(mid, params, floor, out);
  emit_gaps_in(RInterval(c.lo, c.lo + third), params, floor, out);
  emit_gaps_in(RInterval(c.hi - third, c.hi), params, floor, out);
}

void emit_unbounded_standards(const WhitneyParams& params, const Rat& floor,
                              std::vector<WhitneyInterval>& out) {
  for (int n = params.N + 3;; ++n) {
    if (Rat::pow3(-n) < floor) break;
    out.push_back(standard_of_unbounded(n, params));
    out.push_back(standard_of_unbounded(-n, params));
  }
}

// Gap decompositions for all gaps outside the excluded block, which is itself
// a construction interval. Walks down from `c`.
void emit_outside_block(const RInterval& c, const RInterval& block, const WhitneyParams& params,
                        const Rat& floor, std::vector<WhitneyInterval>& out) {
  if (block.contains(c)) return;
  if (!c.interior_intersects(block)) {
    emit_gaps_in(c, params, floor, out);
    return;
  }
  // c properly contains the block; the mid gap of c is disjoint from it.
  Rat third = c.length() / Rat(3);
  RInterval mid(c.lo + third, c.hi - third, false, false);
  emit_gap_decomposition(mid, params, floor, out);
  emit_outside_block(RInterval(c.lo, c.lo + third), block, params, floor, out);
  emit_outside_block(RInterval(c.hi - third, c.hi), block, params, floor, out);
}

}  // namespace

ChildSet children(const WhitneyInterval& J, const WhitneyParams& params, const Rat& size_floor) {
  ChildSet cs;
  cs.truncated_length = Rat(0);
  PalmTip t = tip(J, params);
  switch (J.kind) {
    case WhitneyKind::Standard: {
      emit_gap_decomposition(t.gap_part, params, size_floor, cs.kids);
      emit_gaps_in(t.construction_part, params, size_floor, cs.kids);
      Rat kept(0);
      for (const auto& w : cs.kids) kept += w.euclid_length();
      cs.truncated_length = t.length() - kept;
      return cs;
    }
    case WhitneyKind::Infinity: {
      // E = [1/9, 8/9]: the top gap plus four construction intervals.
      emit_gap_decomposition(RInterval(Rat(1, 3), Rat(2, 3), false, false), params, size_floor,
                             cs.kids);
      emit_gaps_in(RInterval(Rat(1, 9), Rat(2, 9)), params, size_floor, cs.kids);
      emit_gaps_in(RInterval(Rat(2, 9), Rat(1, 3)), params, size_floor, cs.kids);
      emit_gaps_in(RInterval(Rat(2, 3), Rat(7, 9)), params, size_floor, cs.kids);
      emit_gaps_in(RInterval(Rat(7, 9), Rat(8, 9)), params, size_floor, cs.kids);
      Rat kept(0);
      for (const auto& w : cs.kids) kept += w.euclid_length();
      cs.truncated_length = t.length() - kept;
      return cs;
    }
    case WhitneyKind::Central: {
      cs.kids.push_back(infinity_interval(params));
      emit_unbounded_standards(params, size_floor, cs.kids);
      emit_outside_block(RInterval(Rat(0), Rat(1)), t.excluded, params, size_floor, cs.kids);
      // Bounded leftovers: [-sigma, x_l] and [x_r, 1+sigma] minus kept pieces.
      Rat span = (t.excluded.lo + params.sigma) + (Rat(1) + params.sigma - t.excluded.hi);
      Rat kept(0);
      for (const auto& w : cs.kids)
        if (w.kind != WhitneyKind::Infinity) kept += w.euclid_length();
      cs.truncated_length = span - kept;
      return cs;
    }
  }
  throw std::logic_error("children: unreachable");
}

long count_children_of_size(int k) {
  if (k < 1) return 0;
  return 1L << k;
}

namespace {

// Count raw (de-amalgamated) whitney pieces of exact length `target` whose
// closure lies inside `within`, contributed by the gaps of construction
// interval c.
long count_raw_in_construction(const RInterval& c, const Rat& target, const RInterval& within) {
  Rat third = c.length() / Rat(3);
  if (third / Rat(3) < target) return 0;  // J_n of the mid gap are < target already
  RInterval mid(c.lo + third, c.hi - third, false, false);
  long count = 0;
  for (int n = 1;; ++n) {
    Rat len = Rat::pow3(-n) * mid.length();
    if (len < target) break;
    if (len == target) {
      for (int s : {-1, 1}) {
        RInterval piece = whitney_raw(mid, s * n);
        if (within.contains(piece)) ++count;
      }
    }
  }
  count += count_raw_in_construction(RInterval(c.lo, c.lo + third), target, within);
  count += count_raw_in_construction(RInterval(c.hi - third, c.hi), target, within);
  return count;
}

}  // namespace

long count_children_of_size_enumerated(const WhitneyInterval& J, int k,
                                       const WhitneyParams& params) {
  if (!J.is_standard()) throw std::invalid_argument("count_children_of_size: standard J required");
  if (k < 1) return 0;
  PalmTip t = tip(J, params);
  Rat target = Rat::pow3(params.N - k) * J.euclid_length();
  long count = 0;
  for (int s : {-1, 1}) {
    for (int n = 1;; ++n) {
      Rat len = Rat::pow3(-n) * t.gap_part.length();
      if (len < target) break;
      if (len == target && t.geometry.contains(whitney_raw(t.gap_part, s * n))) ++count;
    }
  }
  count += count_raw_in_construction(t.construction_part, target, t.geometry);
  return count;
}

std::pair<long, long> count_in_end_segments(int k, int Q, const WhitneyParams& params) {
  long s1 = (k >= Q + params.N) ? 1 : 0;
  long s5 = 0;
  int tt = k - Q - params.N;
  if (tt >= 2) s5 = (1L << tt) - 2;
  return {s1, s5};
}

std::pair<long, long> count_in_end_segments_enumerated(const WhitneyInterval& J, int k, int Q,
                                                       const WhitneyParams& params) {
  if (!J.is_standard()) throw std::invalid_argument("count_in_end_segments: standard J required");
  PalmTip t = tip(J, params);
  Rat absJ = J.euclid_length();
  Rat target = Rat::pow3(params.N - k) * absJ;
  // S_1: the all-whitney run at the owner-adjacent end of the gap component.
  Rat s1_len = Rat(3, 2) * Rat::pow3(-Q) * absJ;
  RInterval s1 = t.gap_on_left ? RInterval(t.gap_part.lo, t.gap_part.lo + s1_len)
                               : RInterval(t.gap_part.hi - s1_len, t.gap_part.hi);
  // S_5: the construction interval at the far end.
  Rat s5_len = Rat::pow3(-Q) * absJ;
  RInterval s5 = t.gap_on_left ? RInterval(t.construction_part.hi - s5_len, t.construction_part.hi)
                               : RInterval(t.construction_part.lo, t.construction_part.lo + s5_len);
  long in_s1 = 0;
  for (int s : {-1, 1}) {
    for (int n = 1;; ++n) {
      Rat len = Rat::pow3(-n) * t.gap_part.length();
      if (len < target) break;
      if (len == target && s1.contains(whitney_raw(t.gap_part, s * n))) ++in_s1;
    }
  }
  long in_s5 = count_raw_in_construction(s5, target, s5);
  return {in_s1, in_s5};
}

std::vector<VjBand> vj_bands(const WhitneyInterval& Jc, const WhitneyParams& params, int max_j) {
  if (Jc.kind != WhitneyKind::Central)
    throw std::invalid_argument("vj_bands: central owner required");
  PalmTip t = tip(Jc, params);
  std::vector<VjBand> bands;
  Rat d_prev(0);
  Rat nominal = Jc.nominal_length();
  for (int j = 1; j <= max_j; ++j) {
    Rat half = Rat::pow3(j + 10) * nominal / Rat(2);
    Rat d = d_prev + half;
    VjBand b;
    b.j = j;
    b.left = RInterval(t.excluded.lo - d, t.excluded.lo - d_prev);
    b.right = RInterval(t.excluded.hi + d_prev, t.excluded.hi + d);
    bands.push_back(std::move(b));
    d_prev = d;
  }
  return bands;
}

void for_each_gap_meeting(const RInterval& window, int max_level,
                          const std::function<void(const Gap&)>& fn) {
  std::function<void(const RInterval&, int)> walk = [&](const RInterval& c, int level) {
    if (level >= max_level) return;
    if (!c.meets(window)) return;
    Rat third = c.length() / Rat(3);
    RInterval mid(c.lo + third, c.hi - third, false, false);
    if (mid.meets(window)) fn(Gap{mid, level + 1});
    walk(RInterval(c.lo, c.lo + third), level + 1);
    walk(RInterval(c.hi - third, c.hi), level + 1);
  };
  walk(RInterval(Rat(0), Rat(1)), 0);
}

Lemma142Report lemma_14_2_check(const RInterval& A, int max_k) {
  auto e = A.length().log3_exact();
  if (!e || *e > 0 || A.lo < Rat(0) || A.hi > Rat(1))
    throw std::invalid_argument("lemma_14_2_check: A in [0,1] with |A| = 3^-l required");
  int l = static_cast<int>(-*e);
  Lemma142Report r;
  r.largest_fraction = Rat(0);
  r.met_counts.assign(max_k, 0);
  // Raw pieces of length 3^-(k+l) live in gaps of level g < k+l with index
  // n = k+l-g. One descent serves both the containment and the counting.
  int deepest = max_k + l;
  for_each_gap_meeting(A, deepest, [&](const Gap& g) {
    for (int s : {-1, 1}) {
      for (int n = 1; n + g.level <= deepest; ++n) {
        RInterval piece = whitney_raw(g.iv, s * n);
        Rat len = piece.length();
        if (A.contains(piece) && len > r.largest_fraction * A.length())
          r.largest_fraction = len / A.length();
        int k = n + g.level - l;
        if (k >= 1 && piece.meets(A)) ++r.met_counts[k - 1];
      }
    }
  });
  r.contained_ok = r.largest_fraction >= Rat(1, 9);
  r.met_ok = true;
  for (int k = 1; k <= max_k; ++k)
    if (r.met_counts[k - 1] > (1L << k)) r.met_ok = false;
  return r;
}

}  // namespace cascade

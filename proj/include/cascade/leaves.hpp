#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cascade/cantor.hpp"

namespace cascade {

// Jump-target segments E_J attached to Whitney intervals, the child
// enumeration (Whitney intervals contained in E_J), and exact counting of
// children by size class.

struct PalmTip {
  WhitneyInterval owner;
  bool cofinite = false;
  RInterval geometry;           // bounded case
  RInterval excluded;           // cofinite case: tip = R-bar \ (excluded), open excluded
  RInterval gap_part;           // standard owners: the full gap component
  RInterval construction_part;  // standard owners: the construction component
  bool gap_on_left = false;     // layout of the two components within geometry

  Rat length() const;  // Euclid length; throws when cofinite
};

PalmTip tip(const WhitneyInterval& J, const WhitneyParams& params);

struct ChildSet {
  std::vector<WhitneyInterval> kids;
  // Total Euclid length of whitney intervals dropped by the size floor
  // (exact: tip length minus kept length, K itself being null).
  Rat truncated_length;
};

// Whitney intervals of the fixed global decomposition contained in E_J, with
// Euclid length >= size_floor. Cofinite tips always include the Infinity
// interval regardless of the floor.
ChildSet children(const WhitneyInterval& J, const WhitneyParams& params, const Rat& size_floor);

// De-amalgamated counts (the central intervals split back into individual
// raw pieces), matching the exact combinatorics of the construction.
// Number of Whitney intervals of length 3^(N-k) |J| inside E_J; closed form 2^k.
long count_children_of_size(int k);
long count_children_of_size_enumerated(const WhitneyInterval& J, int k,
                                       const WhitneyParams& params);

// Counts inside the end segments S_1 (all-whitney end, length (3/2) 3^-Q |J|)
// and S_5 (construction-interval end, length 3^-Q |J|) of E_J, for size class
// k. Closed forms: S_1 holds one interval per class k >= Q+N; S_5 holds
// 2^(k-Q-N) - 2 intervals for k >= Q+N+2, none below.
std::pair<long, long> count_in_end_segments(int k, int Q, const WhitneyParams& params);
std::pair<long, long> count_in_end_segments_enumerated(const WhitneyInterval& J, int k, int Q,
                                                       const WhitneyParams& params);

struct VjBand {
  int j;
  RInterval left, right;  // equal-length components flanking the excluded block
  Rat total_length() const { return left.length() + right.length(); }
};

// Bands tiling the cofinite tip of a central interval outward from the
// excluded block; |V_j| = 3^(j+10) * nominal(J_c). Components may extend far
// beyond [0,1].
std::vector<VjBand> vj_bands(const WhitneyInterval& Jc, const WhitneyParams& params, int max_j);

struct Lemma142Report {
  Rat largest_fraction;          // largest contained raw-piece length / |A|; 0 if none
  std::vector<long> met_counts;  // met_counts[k-1] = #raw pieces of length 3^-k |A| meeting A
  bool contained_ok = false;     // largest_fraction >= 1/9
  bool met_ok = false;           // met_counts[k-1] <= 2^k for all k
};

// Checks the containment/count facts for a triadic interval A in [0,1] with
// |A| = 3^-l against the de-amalgamated decomposition.
Lemma142Report lemma_14_2_check(const RInterval& A, int max_k);

// Enumeration utility shared with other modules: visit every gap of K that
// meets `window`, up to the given level.
void for_each_gap_meeting(const RInterval& window, int max_level,
                          const std::function<void(const Gap&)>& fn);

}  // namespace cascade

#pragma once

#include <optional>
#include <vector>

#include "cascade/rat.hpp"

namespace cascade {

// Geometry of the ternary Cantor set K in [0,1]: construction intervals,
// gaps, exact distances, and the fixed Whitney decomposition of R-bar \ K.

enum class WhitneyKind { Standard, Central, Infinity };

struct WhitneyParams {
  int N;      // amalgamation width; the 2N middle intervals of a gap fuse
  Rat sigma;  // sigma = (2 * 3^(N+2))^-1

  explicit WhitneyParams(int n);
};

struct WhitneyInterval {
  WhitneyKind kind = WhitneyKind::Standard;
  int index = 0;             // Standard only: signed n, |n| >= N+1 (bounded host)
  RInterval geometry;        // Standard and Central
  CofiniteInterval cof;      // Infinity only
  RInterval host_gap;        // bounded host gap, open
  bool host_unbounded = false;  // host is R-bar \ [0,1]
  long nominal_exp = 0;      // nominal length = 3^nominal_exp

  Rat nominal_length() const { return Rat::pow3(nominal_exp); }
  Rat euclid_length() const;  // throws for Infinity
  bool is_standard() const { return kind == WhitneyKind::Standard; }
};

struct Gap {
  RInterval iv;  // open
  int level;     // |iv| = 3^-level, level >= 1
};

// Exact Euclidean distance from x to K.
Rat dist_to_cantor(const Rat& x);

// Exact distance from a closed interval to K (0 if it meets K).
Rat dist_to_cantor(const RInterval& iv);

// All gaps of [0,1] \ K with length >= 3^-max_level, i.e. levels 1..max_level,
// ordered by level then position.
std::vector<Gap> gaps(int max_level);

// Level l if x is exactly a closed construction interval of length 3^-l.
std::optional<int> construction_interval_of(const RInterval& x);

// True iff (lo,hi) is an open middle-third component of [0,1] \ K.
bool is_gap(const RInterval& iv);
// Gap level for a valid gap.
int gap_level(const RInterval& iv);

// Raw interval J_n of the decomposition of a bounded gap L, any n != 0;
// J_n hangs from the right endpoint, J_{-n} mirrors it.
RInterval whitney_raw(const RInterval& L, int n);

// Whitney decomposition of a bounded gap: Central plus Standard J_{+-n} for
// N+1 <= n <= max_index. Rejects L that is not a gap of K.
std::vector<WhitneyInterval> whitney_of_gap(const RInterval& L, const WhitneyParams& params,
                                            int max_index);

// Decomposition of R-bar \ [0,1]: Infinity interval plus Standard J_{+-n} for
// N+3 <= n <= max_index.
std::vector<WhitneyInterval> whitney_of_unbounded(const WhitneyParams& params, int max_index);

// The central interval of a gap, and the infinity interval, built directly.
WhitneyInterval central_of_gap(const RInterval& L, const WhitneyParams& params);
WhitneyInterval infinity_interval(const WhitneyParams& params);
// Standard interval J_n of a bounded gap (|n| >= N+1).
WhitneyInterval standard_of_gap(const RInterval& L, int n, const WhitneyParams& params);
// Standard interval J_n of the unbounded component (|n| >= N+3).
WhitneyInterval standard_of_unbounded(int n, const WhitneyParams& params);

}  // namespace cascade

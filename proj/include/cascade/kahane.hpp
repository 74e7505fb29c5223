#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cascade/rat.hpp"

namespace cascade {

// Mean-one step densities, layered cascade measures mu_n = F_n...F_1 dx on a
// grid of nested intervals, and the concrete 5-ary model.

struct StepFn {
  RInterval host;
  std::vector<Rat> cuts;  // interior breakpoints, strictly increasing
  std::vector<Rat> vals;  // vals.size() == cuts.size() + 1

  Rat mean() const;  // exact (1/|I|) * integral
  Rat value_at(const Rat& x) const;
};

struct SuitabilityCert {
  bool ok = false;
  Rat delta;  // best delta with delta <= F <= 1/delta (capped at 1)
  Rat eta;    // best eta with F == 1 on both end runs of length >= eta|I| (capped at 1/2)
  std::string reason;
};

// Def-style suitability: exact mean one, positive bounded values, flat unit
// runs at both ends. Rejects malformed (non-monotone) breakpoints.
SuitabilityCert check_suitable(const StepFn& f);

struct Cell {
  Rat lo, hi;
  Rat mass;  // exact total measure, invariant under refinement
  Rat f;     // layer density on the cell (mean value for tail aggregates)
  bool tail = false;  // truncation aggregate; never refined
  int parent = -1;
  long key = -1;  // expander payload
  int first_child = -1;
  int n_children = 0;
};

struct ChildSpec {
  Rat lo, hi, f;
  bool tail = false;
  long key = -1;
};

struct Expansion {
  std::vector<ChildSpec> kids;  // contiguous tiling of the parent cell
  StepFn density;               // the exact layer density on the parent
};

using Expander = std::function<Expansion(const Cell&, int depth)>;

// Exact cascade measure: layer n multiplies layer n-1 by a suitable step
// density. Masses of grid cells are exact rationals; truncated regions are
// carried as tail cells whose mass is exact and conserved.
class LayeredMeasure {
 public:
  LayeredMeasure(RInterval root, Expander expander, long root_key = -1);

  // Builds layers 1..depth, verifying exact mean-one tiling and suitability
  // of each produced density. Throws std::runtime_error naming the offending
  // (layer, interval) on failure.
  void build_to(int depth);

  int depth() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<Cell>& layer(int d) const { return layers_.at(d); }
  const RInterval& root() const { return root_; }

  Rat total_mass(int d) const;

  // Exact bounds on mu([iv]) using layers up to d: interior cells contribute
  // exactly, boundary straddlers and straddling tails contribute their full
  // mass to the upper bound only.
  std::pair<Rat, Rat> mass_of(const RInterval& iv, int d) const;

 private:
  void descend_mass(int d, int target, int idx, const RInterval& iv, Rat& lower,
                    Rat& uncertain) const;

  RInterval root_;
  Expander expander_;
  std::vector<std::vector<Cell>> layers_;
};

// --- the 5-ary model -------------------------------------------------------

// Density pattern on the five fifths of any cell.
const std::array<Rat, 5>& five_ary_pattern();
// Jump probabilities (exact masses of the fifths).
const std::array<Rat, 5>& five_ary_probs();

Expander five_ary_expander(bool lebesgue = false);
LayeredMeasure model_five_ary(int depth, bool lebesgue = false);

struct DoublingResult {
  Rat max_ratio;
  int depth = 0;       // layer attaining the max
  long index = 0;      // left cell index within the layer
  RInterval left, right;
};

// Exhaustive scan of adjacent equal-length 5-ary cells, layers 1..max_depth,
// streaming (no tree materialisation). Exact.
DoublingResult doubling_scan_five_ary(int max_depth, bool lebesgue = false);

// Generic per-layer scan over consecutive equal-length cells of a built measure.
DoublingResult doubling_scan(const LayeredMeasure& m, int max_depth);

// Empirical scan over non-aligned positions at resolution 5^-d: mass ratios of
// [a, a+t] vs [a+t, a+2t] for t = step * 5^-d.
DoublingResult doubling_scan_five_ary_positions(int d, int step, bool lebesgue = false);

struct DimensionEstimate {
  double mean = 0, stddev = 0;
  int depth = 0;
  int samples = 0;
};

// Draws points distributed by the measure (descending the tree with layer
// probabilities) and returns statistics of log mass(I_d(x)) / log |I_d(x)|.
DimensionEstimate local_dimension_estimate_five_ary(int depth, int samples, std::uint64_t seed,
                                                    bool lebesgue = false);

// Closed-form entropy dimension of the 5-ary model: H(p)/log 5.
double five_ary_entropy_dimension();

struct FlatRunResult {
  long pairs_scanned = 0;
  int max_count = 0;
  double bound = 0;  // log(eta) / log(1 - 2 eta)
  bool ok = false;
};

// For adjacent equal-length pairs at resolution 5^-d (aligned cells when
// step == 1, shifted unions otherwise), counts layers n > m on which the
// layer density is constant but != 1 on the right member, m being the first
// layer not constant on the union. Checks the count against the eta bound.
FlatRunResult flat_run_bound_check_five_ary(int d, int step, const Rat& eta,
                                            bool lebesgue = false);

// Measure table export, one row per cell: depth, lo, hi, mass (fractions).
std::string measure_table_csv(const LayeredMeasure& m, int max_depth);
std::string measure_table_json(const LayeredMeasure& m, int max_depth);

}  // namespace cascade

#include "cascade/kahane.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cascade/rng.hpp"

namespace cascade {

int sample_index(SplitMix64& rng, const std::vector<Rat>& cum, const Rat& total) {
  LazyUniform u(rng);
  // u*total < cum[i] <=> u < cum[i]/total; binary search with exact compares.
  int lo = 0, hi = static_cast<int>(cum.size()) - 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (u.less_than(cum[mid] / total))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Rat StepFn::mean() const {
  if (vals.size() != cuts.size() + 1) throw std::invalid_argument("StepFn: size mismatch");
  Rat acc(0);
  Rat prev = host.lo;
  for (size_t i = 0; i < vals.size(); ++i) {
    Rat next = i < cuts.size() ? cuts[i] : host.hi;
    if (next < prev) throw std::invalid_argument("StepFn: non-monotone breakpoints");
    acc += vals[i] * (next - prev);
    prev = next;
  }
  return acc / host.length();
}

Rat StepFn::value_at(const Rat& x) const {
  if (x < host.lo || x > host.hi) throw std::out_of_range("StepFn::value_at");
  size_t i = 0;
  while (i < cuts.size() && x >= cuts[i]) ++i;
  return vals[i];
}

SuitabilityCert check_suitable(const StepFn& f) {
  SuitabilityCert cert;
  if (f.vals.empty() || f.vals.size() != f.cuts.size() + 1) {
    cert.reason = "malformed step function";
    return cert;
  }
  Rat prev = f.host.lo;
  for (const Rat& c : f.cuts) {
    if (!(c > prev) || !(c < f.host.hi)) {
      cert.reason = "non-monotone breakpoints";
      return cert;
    }
    prev = c;
  }
  for (const Rat& v : f.vals) {
    if (v.sgn() <= 0) {
      cert.reason = "non-positive value";
      return cert;
    }
  }
  if (f.mean() != Rat(1)) {
    cert.reason = "mean is " + f.mean().str() + ", not 1";
    return cert;
  }
  Rat vmin = f.vals[0], vmax = f.vals[0];
  for (const Rat& v : f.vals) {
    vmin = min(vmin, v);
    vmax = max(vmax, v);
  }
  cert.delta = min(Rat(1), min(vmin, vmax.inv()));
  // flat unit runs at the two ends
  Rat left_run(0);
  {
    Rat prev_x = f.host.lo;
    for (size_t i = 0; i < f.vals.size(); ++i) {
      Rat next = i < f.cuts.size() ? f.cuts[i] : f.host.hi;
      if (f.vals[i] != Rat(1)) break;
      left_run += next - prev_x;
      prev_x = next;
    }
  }
  Rat right_run(0);
  {
    Rat next_x = f.host.hi;
    for (size_t i = f.vals.size(); i-- > 0;) {
      Rat prev_x = i > 0 ? f.cuts[i - 1] : f.host.lo;
      if (f.vals[i] != Rat(1)) break;
      right_run += next_x - prev_x;
      next_x = prev_x;
    }
  }
  Rat eta = min(left_run, right_run) / f.host.length();
  cert.eta = min(eta, Rat(1, 2));
  if (cert.eta.sgn() <= 0) {
    cert.reason = "no flat unit run at an end";
    return cert;
  }
  cert.ok = true;
  return cert;
}

LayeredMeasure::LayeredMeasure(RInterval root, Expander expander, long root_key)
    : root_(std::move(root)), expander_(std::move(expander)) {
  Cell c;
  c.lo = root_.lo;
  c.hi = root_.hi;
  c.mass = root_.length();
  c.f = Rat(1);
  c.key = root_key;
  layers_.push_back({c});
}

void LayeredMeasure::build_to(int depth) {
  while (this->depth() < depth) {
    int d = this->depth();
    std::vector<Cell> next;
    auto& cur = layers_[d];
    for (size_t ci = 0; ci < cur.size(); ++ci) {
      Cell& cell = cur[ci];
      if (cell.tail) continue;
      Expansion ex = expander_(cell, d);
      SuitabilityCert cert = check_suitable(ex.density);
      if (!cert.ok) {
        throw std::runtime_error("layer " + std::to_string(d + 1) + " density on [" +
                                 cell.lo.str() + ", " + cell.hi.str() +
                                 "] not suitable: " + cert.reason);
      }
      // exact tiling check and mass assignment
      Rat cover = cell.lo;
      Rat mass_sum(0);
      cell.first_child = static_cast<int>(next.size());
      cell.n_children = static_cast<int>(ex.kids.size());
      for (const ChildSpec& k : ex.kids) {
        if (k.lo != cover || k.hi < k.lo)
          throw std::runtime_error("layer " + std::to_string(d + 1) + ": children do not tile [" +
                                   cell.lo.str() + ", " + cell.hi.str() + "]");
        cover = k.hi;
        Cell ch;
        ch.lo = k.lo;
        ch.hi = k.hi;
        ch.f = k.f;
        ch.tail = k.tail;
        ch.parent = static_cast<int>(ci);
        ch.key = k.key;
        ch.mass = cell.mass * k.f * (k.hi - k.lo) / (cell.hi - cell.lo);
        mass_sum += ch.mass;
        next.push_back(std::move(ch));
      }
      if (cover != cell.hi)
        throw std::runtime_error("layer " + std::to_string(d + 1) + ": children do not reach hi");
      if (mass_sum != cell.mass)
        throw std::runtime_error("layer " + std::to_string(d + 1) +
                                 ": children masses do not conserve parent mass");
    }
    layers_.push_back(std::move(next));
  }
}

Rat LayeredMeasure::total_mass(int d) const {
  if (d == 0) return layers_[0][0].mass;
  // Tail cells stop refining, so the layer-d partition of the root consists of
  // the non-tail cells at depth d plus every tail cell frozen at depths <= d.
  Rat acc(0);
  for (int dd = 1; dd < d; ++dd)
    for (const Cell& c : layers_.at(dd))
      if (c.tail) acc += c.mass;
  for (const Cell& c : layers_.at(d)) acc += c.mass;
  return acc;
}

void LayeredMeasure::descend_mass(int d, int target, int idx, const RInterval& iv, Rat& lower,
                                  Rat& uncertain) const {
  const Cell& c = layers_[d][idx];
  if (c.hi <= iv.lo || c.lo >= iv.hi) return;
  if (iv.lo <= c.lo && c.hi <= iv.hi) {
    lower += c.mass;
    return;
  }
  if (d == target || c.tail || c.n_children == 0) {
    uncertain += c.mass;
    return;
  }
  for (int k = 0; k < c.n_children; ++k) descend_mass(d + 1, target, c.first_child + k, iv, lower, uncertain);
}

std::pair<Rat, Rat> LayeredMeasure::mass_of(const RInterval& iv, int d) const {
  if (iv.lo < root_.lo || iv.hi > root_.hi)
    throw std::invalid_argument("mass_of: interval outside root");
  if (d > depth()) throw std::invalid_argument("mass_of: depth not built");
  Rat lower(0), uncertain(0);
  descend_mass(0, d, 0, iv, lower, uncertain);
  return {lower, lower + uncertain};
}

// --- 5-ary model ------------------------------------------------------------

const std::array<Rat, 5>& five_ary_pattern() {
  static const std::array<Rat, 5> p = {Rat(1), Rat(1, 2), Rat(2), Rat(1, 2), Rat(1)};
  return p;
}

const std::array<Rat, 5>& five_ary_probs() {
  static const std::array<Rat, 5> p = {Rat(1, 5), Rat(1, 10), Rat(2, 5), Rat(1, 10), Rat(1, 5)};
  return p;
}

Expander five_ary_expander(bool lebesgue) {
  return [lebesgue](const Cell& cell, int) -> Expansion {
    Expansion ex;
    Rat fifth = (cell.hi - cell.lo) / Rat(5);
    ex.density.host = RInterval(cell.lo, cell.hi);
    for (int i = 0; i < 5; ++i) {
      ChildSpec k;
      k.lo = cell.lo + Rat(i) * fifth;
      k.hi = i == 4 ? cell.hi : cell.lo + Rat(i + 1) * fifth;
      k.f = lebesgue ? Rat(1) : five_ary_pattern()[i];
      ex.kids.push_back(k);
      if (i < 4) ex.density.cuts.push_back(k.hi);
      ex.density.vals.push_back(k.f);
    }
    return ex;
  };
}

LayeredMeasure model_five_ary(int depth, bool lebesgue) {
  if (depth < 1) throw std::invalid_argument("model_five_ary: depth >= 1 required");
  LayeredMeasure m(RInterval(Rat(0), Rat(1)), five_ary_expander(lebesgue));
  m.build_to(depth);
  return m;
}

namespace {

// Mass of the 5-ary cell with the given digits (most significant first).
Rat five_mass(const std::vector<int>& digits, bool lebesgue) {
  Rat m(1);
  if (lebesgue) {
    for (size_t i = 0; i < digits.size(); ++i) m /= Rat(5);
    return m;
  }
  for (int dig : digits) m *= five_ary_probs()[dig];
  return m;
}

}  // namespace

DoublingResult doubling_scan_five_ary(int max_depth, bool lebesgue) {
  DoublingResult best;
  best.max_ratio = Rat(1);
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<int> digits(d, 0);
    Rat prev = five_mass(digits, lebesgue);
    long count = 1;
    for (long j = 1;; ++j) {
      // odometer increment
      int pos = d - 1;
      while (pos >= 0 && digits[pos] == 4) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
      Rat cur = five_mass(digits, lebesgue);
      Rat ratio = max(cur / prev, prev / cur);
      if (ratio > best.max_ratio) {
        best.max_ratio = ratio;
        best.depth = d;
        best.index = j - 1;
        Rat w = Rat::pow(Rat(1, 5), d);
        best.left = RInterval(Rat(j - 1) * w, Rat(j) * w);
        best.right = RInterval(Rat(j) * w, Rat(j + 1) * w);
      }
      prev = cur;
      ++count;
    }
    (void)count;
  }
  return best;
}

DoublingResult doubling_scan(const LayeredMeasure& m, int max_depth) {
  DoublingResult best;
  best.max_ratio = Rat(1);
  for (int d = 1; d <= std::min(max_depth, m.depth()); ++d) {
    const auto& layer = m.layer(d);
    for (size_t i = 0; i + 1 < layer.size(); ++i) {
      const Cell& a = layer[i];
      const Cell& b = layer[i + 1];
      if (a.hi != b.lo) continue;
      if (a.hi - a.lo != b.hi - b.lo) continue;
      if (a.mass.is_zero() || b.mass.is_zero()) continue;
      Rat ratio = max(a.mass / b.mass, b.mass / a.mass);
      if (ratio > best.max_ratio) {
        best.max_ratio = ratio;
        best.depth = d;
        best.index = static_cast<long>(i);
        best.left = RInterval(a.lo, a.hi);
        best.right = RInterval(b.lo, b.hi);
      }
    }
  }
  return best;
}

DoublingResult doubling_scan_five_ary_positions(int d, int step, bool lebesgue) {
  // prefix sums of depth-d cell masses
  long n = 1;
  for (int i = 0; i < d; ++i) n *= 5;
  std::vector<Rat> prefix(n + 1, Rat(0));
  std::vector<int> digits(d, 0);
  for (long j = 0; j < n; ++j) {
    prefix[j + 1] = prefix[j] + five_mass(digits, lebesgue);
    int pos = d - 1;
    while (pos >= 0 && digits[pos] == 4) digits[pos--] = 0;
    if (pos >= 0) ++digits[pos];
  }
  DoublingResult best;
  best.max_ratio = Rat(1);
  Rat w = Rat::pow(Rat(1, 5), d);
  for (long a = 0; a + 2 * step <= n; ++a) {
    Rat m1 = prefix[a + step] - prefix[a];
    Rat m2 = prefix[a + 2 * step] - prefix[a + step];
    Rat ratio = max(m1 / m2, m2 / m1);
    if (ratio > best.max_ratio) {
      best.max_ratio = ratio;
      best.depth = d;
      best.index = a;
      best.left = RInterval(Rat(a) * w, Rat(a + step) * w);
      best.right = RInterval(Rat(a + step) * w, Rat(a + 2 * step) * w);
    }
  }
  return best;
}

DimensionEstimate local_dimension_estimate_five_ary(int depth, int samples, std::uint64_t seed,
                                                    bool lebesgue) {
  if (depth < 8) throw std::invalid_argument("local_dimension_estimate: depth >= 8 required");
  const auto& probs = five_ary_probs();
  std::vector<Rat> cum(5);
  Rat acc(0);
  for (int i = 0; i < 5; ++i) {
    acc += lebesgue ? Rat(1, 5) : probs[i];
    cum[i] = acc;
  }
  double log5 = std::log(5.0);
  double sum = 0, sumsq = 0;
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::derive(seed, static_cast<std::uint64_t>(s));
    double logmass = 0;
    for (int i = 0; i < depth; ++i) {
      int dig = sample_index(rng, cum, Rat(1));
      logmass += std::log((lebesgue ? Rat(1, 5) : probs[dig]).to_double());
    }
    double stat = logmass / (-depth * log5);
    sum += stat;
    sumsq += stat * stat;
  }
  DimensionEstimate est;
  est.depth = depth;
  est.samples = samples;
  est.mean = sum / samples;
  est.stddev = std::sqrt(std::max(0.0, sumsq / samples - est.mean * est.mean));
  return est;
}

double five_ary_entropy_dimension() {
  double h = 0;
  for (const Rat& p : five_ary_probs()) {
    double x = p.to_double();
    h -= x * std::log(x);
  }
  return h / std::log(5.0);
}

namespace {

int five_digit_at(long cell, int d, int layer) {
  // digit of depth-d cell index at 1-based layer
  long div = 1;
  for (int i = 0; i < d - layer; ++i) div *= 5;
  return static_cast<int>((cell / div) % 5);
}

}  // namespace

FlatRunResult flat_run_bound_check_five_ary(int d, int step, const Rat& eta, bool lebesgue) {
  FlatRunResult r;
  double e = eta.to_double();
  r.bound = std::log(e) / std::log(1 - 2 * e);
  long n = 1;
  for (int i = 0; i < d; ++i) n *= 5;
  const auto& pat = five_ary_pattern();
  auto value_on = [&](long lo_cell, long hi_cell, int layer, bool& constant) -> Rat {
    // density value of layer `layer` on cells [lo_cell, hi_cell); constant iff
    // all digits at that layer agree in value
    Rat v = lebesgue ? Rat(1) : pat[five_digit_at(lo_cell, d, layer)];
    constant = true;
    for (long c = lo_cell; c < hi_cell; ++c) {
      Rat vc = lebesgue ? Rat(1) : pat[five_digit_at(c, d, layer)];
      if (vc != v) {
        constant = false;
        return v;
      }
    }
    return v;
  };
  for (long a = 0; a + 2 * step <= n; ++a) {
    ++r.pairs_scanned;
    int m = 0;  // first layer not constant on the union, 0 if none
    for (int layer = 1; layer <= d; ++layer) {
      bool c;
      value_on(a, a + 2 * step, layer, c);
      if (!c) {
        m = layer;
        break;
      }
    }
    if (m == 0) continue;
    int count = 0;
    for (int layer = m + 1; layer <= d; ++layer) {
      bool c;
      Rat v = value_on(a + step, a + 2 * step, layer, c);
      if (c && v != Rat(1)) ++count;
    }
    if (count > r.max_count) r.max_count = count;
  }
  r.ok = r.max_count <= static_cast<int>(r.bound);
  return r;
}

std::string measure_table_csv(const LayeredMeasure& m, int max_depth) {
  std::ostringstream os;
  os << "depth,lo,hi,mass_num,mass_den\n";
  for (int d = 0; d <= std::min(max_depth, m.depth()); ++d) {
    for (const Cell& c : m.layer(d)) {
      os << d << "," << c.lo.str() << "," << c.hi.str() << "," << c.mass.num().get_str() << ","
         << c.mass.den().get_str() << "\n";
    }
  }
  return os.str();
}

std::string measure_table_json(const LayeredMeasure& m, int max_depth) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int d = 0; d <= std::min(max_depth, m.depth()); ++d) {
    for (const Cell& c : m.layer(d)) {
      if (!first) os << ",";
      first = false;
      os << "{\"depth\":" << d << ",\"lo\":\"" << c.lo.str() << "\",\"hi\":\"" << c.hi.str()
         << "\",\"mass\":\"" << c.mass.str() << "\",\"tail\":" << (c.tail ? "true" : "false")
         << "}";
    }
  }
  os << "]";
  return os.str();
}

}  // namespace cascade

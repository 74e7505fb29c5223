#include <doctest.h>

#include "cascade/cantor.hpp"
#include "cascade/rng.hpp"

using namespace cascade;

namespace {

// Independent oracle: minimum distance from x to the endpoints of all
// construction intervals of level <= max_level. Branch-and-bound descent over
// the construction tree; pruning is exact so the result is the true minimum.
void oracle_rec(const RInterval& c, int level, int max_level, const Rat& x, Rat& best) {
  Rat d_lo = (x - c.lo).abs(), d_hi = (x - c.hi).abs();
  if (d_lo < best) best = d_lo;
  if (d_hi < best) best = d_hi;
  if (level == max_level) return;
  // distance from x to c as a whole; no endpoint inside can beat best if larger
  Rat d_iv = x < c.lo ? c.lo - x : (x > c.hi ? x - c.hi : Rat(0));
  if (d_iv > best) return;
  Rat third = c.length() / Rat(3);
  oracle_rec(RInterval(c.lo, c.lo + third), level + 1, max_level, x, best);
  oracle_rec(RInterval(c.hi - third, c.hi), level + 1, max_level, x, best);
}

Rat oracle_dist_endpoints(const Rat& x, int max_level) {
  Rat best = (x - Rat(0)).abs();
  oracle_rec(RInterval(Rat(0), Rat(1)), 0, max_level, x, best);
  return best;
}

}  // namespace

TEST_CASE("dist_to_cantor point examples") {
  CHECK(dist_to_cantor(Rat(0)) == Rat(0));
  CHECK(dist_to_cantor(Rat(2)) == Rat(1));
  CHECK(dist_to_cantor(Rat(-3, 2)) == Rat(3, 2));
  // frozen from the endpoint oracle at level 20
  CHECK(oracle_dist_endpoints(Rat(1, 2), 20) == Rat(1, 6));
  CHECK(dist_to_cantor(Rat(1, 2)) == Rat(1, 6));
  CHECK(dist_to_cantor(Rat(1, 3)) == Rat(0));
  CHECK(dist_to_cantor(Rat(2, 9)) == Rat(0));
  CHECK(dist_to_cantor(Rat(5, 12)) == Rat(1, 12));
}

TEST_CASE("dist_to_cantor detects K points that are not endpoints") {
  CHECK(dist_to_cantor(Rat(1, 4)) == Rat(0));   // 0.020202..._3
  CHECK(dist_to_cantor(Rat(3, 4)) == Rat(0));
  CHECK(dist_to_cantor(Rat(1, 10)) == Rat(0));  // 0.00220022..._3
  CHECK(dist_to_cantor(Rat(1, 5)) > Rat(0));    // 0.0121..._3 has a 1
}

TEST_CASE("dist_to_cantor agrees with endpoint oracle on random rationals") {
  const int kLevel = 25;
  Rat slack = Rat::pow3(-kLevel);
  SplitMix64 rng(20260809);
  for (int i = 0; i < 10000; ++i) {
    long num = static_cast<long>(rng.next() % 3000000) - 1000000;
    long den = static_cast<long>(rng.next() % 999999) + 1;
    Rat x(num, den * 2);  // lands in [-0.5, 1.0] roughly
    Rat d = dist_to_cantor(x);
    Rat bf = oracle_dist_endpoints(x, kLevel);
    CHECK(d <= bf);
    CHECK(bf <= d + slack);
  }
}

TEST_CASE("gaps enumeration") {
  auto g1 = gaps(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].iv == RInterval(Rat(1, 3), Rat(2, 3)));
  CHECK(g1[0].level == 1);

  auto g2 = gaps(2);
  REQUIRE(g2.size() == 3);
  CHECK(g2[1].iv == RInterval(Rat(1, 9), Rat(2, 9)));
  CHECK(g2[2].iv == RInterval(Rat(7, 9), Rat(8, 9)));

  auto g5 = gaps(5);
  int level5 = 0;
  for (const auto& g : g5)
    if (g.level == 5) ++level5;
  CHECK(level5 == 16);
  for (const auto& g : g5) CHECK(g.iv.length() == Rat::pow3(-g.level));
}

TEST_CASE("construction_interval_of") {
  CHECK(construction_interval_of(RInterval(Rat(0), Rat(1))).value() == 0);
  CHECK(construction_interval_of(RInterval(Rat(2, 3), Rat(1))).value() == 1);
  CHECK(!construction_interval_of(RInterval(Rat(1, 3), Rat(2, 3))).has_value());
  CHECK(construction_interval_of(RInterval(Rat(2, 9), Rat(1, 3))).value() == 2);
  CHECK(!construction_interval_of(RInterval(Rat(4, 9), Rat(5, 9))).has_value());
  CHECK(!construction_interval_of(RInterval(Rat(0), Rat(1, 2))).has_value());
}

TEST_CASE("is_gap") {
  CHECK(is_gap(RInterval(Rat(1, 3), Rat(2, 3))));
  CHECK(is_gap(RInterval(Rat(7, 9), Rat(8, 9))));
  CHECK(!is_gap(RInterval(Rat(0), Rat(1, 3))));
  CHECK(!is_gap(RInterval(Rat(4, 9), Rat(5, 9))));
  CHECK(gap_level(RInterval(Rat(1, 9), Rat(2, 9))) == 2);
}

TEST_CASE("whitney_raw matches the explicit construction") {
  RInterval L(Rat(1, 3), Rat(2, 3));
  RInterval j1 = whitney_raw(L, 1);
  CHECK(j1 == RInterval(Rat(1, 2), Rat(11, 18)));
  CHECK(j1.length() == Rat(1, 9));
  // J_{-n} is the reflection of J_n through the midpoint of L
  for (int n = 1; n <= 6; ++n) {
    RInterval p = whitney_raw(L, n), q = whitney_raw(L, -n);
    CHECK(q.lo == Rat(1) - p.hi);
    CHECK(q.hi == Rat(1) - p.lo);
    CHECK(p.length() == Rat::pow3(-n) * L.length());
  }
}

TEST_CASE("whitney_of_gap geometry and whitney condition") {
  WhitneyParams params(2);
  RInterval L(Rat(1, 3), Rat(2, 3));
  auto ws = whitney_of_gap(L, params, 8);
  REQUIRE(!ws.empty());
  CHECK(ws[0].kind == WhitneyKind::Central);
  CHECK(ws[0].geometry == RInterval(Rat(1, 3) + Rat(1, 54), Rat(2, 3) - Rat(1, 54)));
  CHECK(ws[0].geometry.length() == (Rat(1) - Rat(1, 9)) * Rat(1, 3));
  CHECK(ws[0].nominal_length() == Rat(1, 9));

  for (const auto& w : ws) {
    if (!w.is_standard()) continue;
    // |J| = 2 dist(J, K) as an exact identity
    CHECK(w.euclid_length() == Rat(2) * dist_to_cantor(w.geometry));
    CHECK(w.euclid_length() == w.nominal_length());
  }
  CHECK_THROWS(whitney_of_gap(RInterval(Rat(0), Rat(1, 3)), params, 8));
  CHECK_THROWS(whitney_of_gap(RInterval(Rat(4, 9), Rat(5, 9)), params, 8));
}

TEST_CASE("two standard intervals per size per gap") {
  WhitneyParams params(2);
  RInterval L(Rat(1, 9), Rat(2, 9));
  auto ws = whitney_of_gap(L, params, 9);
  for (int n = params.N + 1; n <= 9; ++n) {
    int count = 0;
    for (const auto& w : ws)
      if (w.is_standard() && w.euclid_length() == Rat::pow3(-n) * L.length()) ++count;
    CHECK(count == 2);
  }
}

TEST_CASE("whitney_of_unbounded") {
  WhitneyParams params(2);
  CHECK(params.sigma == Rat(1, 162));
  auto ws = whitney_of_unbounded(params, 9);
  REQUIRE(ws[0].kind == WhitneyKind::Infinity);
  CHECK(ws[0].cof.excluded == RInterval(-Rat(1, 162), Rat(1) + Rat(1, 162)));
  CHECK(ws[0].nominal_length() == Rat(1, 3));

  // J_{N+3} = [-sigma, -sigma/3], length 3^-(N+3)
  const WhitneyInterval& j5 = ws[1];
  CHECK(j5.index == 5);
  CHECK(j5.geometry == RInterval(-params.sigma, -params.sigma / Rat(3)));
  CHECK(j5.euclid_length() == Rat::pow3(-5));
  CHECK(j5.euclid_length() == Rat(2) * params.sigma / Rat(3));

  for (const auto& w : ws) {
    if (!w.is_standard()) continue;
    CHECK(w.euclid_length() == Rat(2) * dist_to_cantor(w.geometry));
    // reflection through x = 1/2
    if (w.index > 0) {
      for (const auto& v : ws) {
        if (v.index == -w.index) {
          CHECK(v.geometry.lo == Rat(1) - w.geometry.hi);
          CHECK(v.geometry.hi == Rat(1) - w.geometry.lo);
        }
      }
    }
  }
}

TEST_CASE("interval distance to K") {
  CHECK(dist_to_cantor(RInterval(Rat(1, 2), Rat(11, 18))) == Rat(1, 18));
  CHECK(dist_to_cantor(RInterval(Rat(1, 4), Rat(1, 2))) == Rat(0));   // 1/4 in K
  CHECK(dist_to_cantor(RInterval(Rat(2), Rat(3))) == Rat(1));
  CHECK(dist_to_cantor(RInterval(Rat(11, 27), Rat(4, 9))) == Rat(2, 27));
  // inside the top gap, no K point: distance to the closer gap end
  CHECK(dist_to_cantor(RInterval(Rat(2, 5), Rat(3, 5))) == Rat(1, 15));
}

TEST_CASE("endpoints stay triadic up to powers of two") {
  WhitneyParams params(3);
  auto ws = whitney_of_gap(RInterval(Rat(1, 3), Rat(2, 3)), params, 7);
  for (const auto& w : ws) {
    mpz_class d = w.geometry.lo.den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), 3)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 3);
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    CHECK(d == 1);
  }
}

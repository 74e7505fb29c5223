#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cascade {

// Exact arbitrary-precision rational. Thin wrapper over GMP's mpq_class that
// guarantees canonical form (lowest terms, positive denominator) on every
// construction path. All interval endpoints and measure masses in this
// project are Rats; there is no floating-point fast path.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // 3^e for any integer e (negative exponents allowed).
  static Rat pow3(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p, 1) : Rat(1, p);
  }

  static Rat pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    Rat r(1);
    Rat b = e > 0 ? x : x.inv();
    long k = e > 0 ? e : -e;
    for (; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      b *= b;
    }
    return r;
  }

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(v_.get_den(), v_.get_num());
  }
  Rat abs() const { return sgn() < 0 ? Rat(mpq_class(-v_)) : *this; }

  // If *this == 3^e for an integer e, return e.
  std::optional<long> log3_exact() const {
    if (sgn() <= 0) return std::nullopt;
    const mpz_class n = num(), d = den();
    if (n == 1) {
      long e = exact_pow3_exponent(d);
      if (e >= 0) return -e;
      return std::nullopt;
    }
    if (d == 1) {
      long e = exact_pow3_exponent(n);
      if (e >= 0) return e;
      return std::nullopt;
    }
    return std::nullopt;
  }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  // Returns e >= 0 with z == 3^e, or -1.
  static long exact_pow3_exponent(mpz_class z) {
    long e = 0;
    while (z > 1) {
      if (!mpz_divisible_ui_p(z.get_mpz_t(), 3)) return -1;
      mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), 3);
      ++e;
    }
    return z == 1 ? e : -1;
  }

  mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Closed interval [lo, hi] with rational endpoints; closedness flags cover the
// open-gap case.
struct RInterval {
  Rat lo, hi;
  bool closed_lo = true;
  bool closed_hi = true;

  RInterval() = default;
  RInterval(Rat l, Rat h, bool cl = true, bool ch = true)
      : lo(std::move(l)), hi(std::move(h)), closed_lo(cl), closed_hi(ch) {
    if (hi < lo) throw std::invalid_argument("RInterval: hi < lo");
  }

  Rat length() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }

  bool contains_point(const Rat& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !closed_lo) return false;
    if (x == hi && !closed_hi) return false;
    return true;
  }
  // Set containment of closures; adequate for the closed-interval geometry here.
  bool contains(const RInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool interior_intersects(const RInterval& o) const {
    return lo < o.hi && o.lo < hi;
  }
  bool meets(const RInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const RInterval& a, const RInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// The complement R-bar \ (excluded), a closed neighbourhood of the point at
// infinity when `excluded` is taken open.
struct CofiniteInterval {
  RInterval excluded;

  CofiniteInterval() = default;
  explicit CofiniteInterval(RInterval ex) : excluded(std::move(ex)) {
    if (!(excluded.lo < excluded.hi))
      throw std::invalid_argument("CofiniteInterval: excluded must be nondegenerate");
  }

  bool contains_point(const Rat& x) const {
    return x <= excluded.lo || x >= excluded.hi;
  }
  bool contains(const RInterval& o) const {
    return o.hi <= excluded.lo || o.lo >= excluded.hi;
  }
};

}  // namespace cascade

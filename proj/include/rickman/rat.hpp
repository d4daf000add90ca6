#pragma once

#include <numeric>
#include <string>

#include "rickman/base.hpp"

namespace rickman {

// Exact rational with i64 numerator/denominator; intermediates widened to
// __int128. Large enough for every value this project produces (coordinates
// are fixed-point integers, PL heights have tiny denominators).
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 v) : num(v), den(1) {}
  Rat(i64 n_, i64 d_) : num(n_), den(d_) { normalize(); }

  void normalize() {
    if (den == 0) throw err("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Rat from128(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    n /= a; d /= a;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw err("Rat: overflow");
    Rat r;
    r.num = static_cast<i64>(n);
    r.den = static_cast<i64>(d);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                   static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from128(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
                   static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw err("Rat: division by zero");
    return from128(static_cast<i128>(a.num) * b.den, static_cast<i128>(a.den) * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 l = static_cast<i128>(a.num) * b.den, r = static_cast<i128>(b.num) * a.den;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  bool is_int() const { return den == 1; }
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_abs(const Rat& a) { return a.num < 0 ? -a : a; }

}  // namespace rickman

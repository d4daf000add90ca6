#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rickman {

using i64 = std::int64_t;
using i32 = std::int32_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Hard limit on the ambient dimension; the constructions use n = 3..5.
constexpr int kMaxDim = 6;

inline i64 pow3(int k) {
  i64 r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

inline bool is_pow3(i64 v) {
  if (v <= 0) return false;
  while (v % 3 == 0) v /= 3;
  return v == 1;
}

// floor division (3-adic alignment must work for negative coordinates)
inline i64 fdiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 align_down(i64 a, i64 s) { return fdiv(a, s) * s; }

struct Vec {
  std::array<i64, kMaxDim> c{};
  int n = 0;

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  static Vec of(std::initializer_list<i64> v) {
    Vec r;
    r.n = static_cast<int>(v.size());
    int i = 0;
    for (i64 x : v) r.c[i++] = x;
    return r;
  }

  i64& operator[](int i) { return c[i]; }
  i64 operator[](int i) const { return c[i]; }

  friend Vec operator+(Vec a, const Vec& b) {
    for (int i = 0; i < a.n; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Vec operator-(Vec a, const Vec& b) {
    for (int i = 0; i < a.n; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Vec operator*(i64 s, Vec a) {
    for (int i = 0; i < a.n; ++i) a.c[i] *= s;
    return a;
  }
  Vec shifted(int axis, i64 d) const {
    Vec r = *this;
    r.c[axis] += d;
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.c[i] != b.c[i]) return false;
    return true;
  }
  // lexicographic; total order used for all deterministic tie-breaking
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    if (a.n != b.n) return a.n <=> b.n;
    for (int i = 0; i < a.n; ++i)
      if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += std::to_string(c[i]) + (i + 1 < n ? "," : "");
    return s + ")";
  }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    u64 h = 1469598103934665603ull ^ static_cast<u64>(v.n);
    for (int i = 0; i < v.n; ++i) {
      h ^= static_cast<u64>(v.c[i]) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct err : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rickman

#pragma once

#include "rickman/base.hpp"
#include "rickman/rat.hpp"

namespace rickman {

// Closed axis-aligned n-cube [corner, corner+side]^n on the integer lattice.
// Side lengths are powers of 3 wherever 3-adic alignment matters; unit cubes
// (side 1) are the finest objects of the construction.
struct Cube {
  Vec corner;
  i64 side = 1;

  Cube() = default;
  Cube(Vec c, i64 s) : corner(c), side(s) {}

  int dim() const { return corner.n; }
  Vec high() const {
    Vec h = corner;
    for (int i = 0; i < h.n; ++i) h.c[i] += side;
    return h;
  }
  bool contains(const Cube& o) const {
    for (int i = 0; i < corner.n; ++i)
      if (o.corner[i] < corner[i] || o.corner[i] + o.side > corner[i] + side) return false;
    return true;
  }
  bool contains_point2(const Vec& p2) const {  // p2 in doubled coordinates
    for (int i = 0; i < corner.n; ++i)
      if (p2[i] < 2 * corner[i] || p2[i] > 2 * (corner[i] + side)) return false;
    return true;
  }
  // closed intersection test
  friend bool meets(const Cube& a, const Cube& b) {
    for (int i = 0; i < a.corner.n; ++i)
      if (a.corner[i] + a.side < b.corner[i] || b.corner[i] + b.side < a.corner[i]) return false;
    return true;
  }
  // open interiors intersect
  friend bool overlaps(const Cube& a, const Cube& b) {
    for (int i = 0; i < a.corner.n; ++i)
      if (a.corner[i] + a.side <= b.corner[i] || b.corner[i] + b.side <= a.corner[i]) return false;
    return true;
  }
  // dimension of the closed intersection, or -1 if disjoint
  friend int meet_dim(const Cube& a, const Cube& b) {
    int d = 0;
    for (int i = 0; i < a.corner.n; ++i) {
      i64 lo = std::max(a.corner[i], b.corner[i]);
      i64 hi = std::min(a.corner[i] + a.side, b.corner[i] + b.side);
      if (lo > hi) return -1;
      if (lo < hi) ++d;
    }
    return d;
  }
  // sup-metric distance between cubes as sets
  friend i64 cube_dist(const Cube& a, const Cube& b) {
    i64 d = 0;
    for (int i = 0; i < a.corner.n; ++i) {
      i64 g = std::max(b.corner[i] - (a.corner[i] + a.side), a.corner[i] - (b.corner[i] + b.side));
      d = std::max(d, g);
    }
    return d < 0 ? 0 : d;
  }

  friend bool operator==(const Cube& a, const Cube& b) { return a.side == b.side && a.corner == b.corner; }
  friend std::strong_ordering operator<=>(const Cube& a, const Cube& b) {
    if (auto c = a.corner <=> b.corner; c != 0) return c;
    return a.side <=> b.side;
  }

  Cube scaled(i64 s) const { return Cube(s * corner, side * s); }
  std::string str() const { return corner.str() + "+" + std::to_string(side); }
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const {
    return VecHash{}(c.corner) * 1315423911u ^ static_cast<std::size_t>(c.side);
  }
};

// Axis-aligned k-cell: extends [corner_i, corner_i+side] on axes in `span`
// (bitmask), degenerate elsewhere. Used for faces, edges and boundary pieces.
struct Cell {
  Vec corner;
  i64 side = 1;
  unsigned span = 0;

  Cell() = default;
  Cell(Vec c, i64 s, unsigned sp) : corner(c), side(s), span(sp) {}

  int dim() const { return __builtin_popcount(span); }
  int ambient() const { return corner.n; }
  bool spans(int axis) const { return (span >> axis) & 1u; }
  i64 lo(int axis) const { return corner[axis]; }
  i64 hi(int axis) const { return corner[axis] + (spans(axis) ? side : 0); }

  bool contains_cell(const Cell& o) const {
    for (int i = 0; i < corner.n; ++i)
      if (o.lo(i) < lo(i) || o.hi(i) > hi(i)) return false;
    return true;
  }
  friend int meet_dim(const Cell& a, const Cell& b) {
    int d = 0;
    for (int i = 0; i < a.corner.n; ++i) {
      i64 l = std::max(a.lo(i), b.lo(i)), h = std::min(a.hi(i), b.hi(i));
      if (l > h) return -1;
      if (l < h) ++d;
    }
    return d;
  }
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.span == b.span && a.side == b.side && a.corner == b.corner;
  }
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.corner <=> b.corner; c != 0) return c;
    if (auto c = a.side <=> b.side; c != 0) return c;
    return a.span <=> b.span;
  }
  Cell scaled(i64 s) const { return Cell(s * corner, side * s, span); }
  std::string str() const {
    return corner.str() + "+" + std::to_string(side) + "/sp" + std::to_string(span);
  }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    return VecHash{}(c.corner) * 2654435761u ^ (static_cast<std::size_t>(c.side) << 8) ^ c.span;
  }
};

inline unsigned full_span(int n) { return (1u << n) - 1u; }

// face of a cube orthogonal to `axis` at the low (s=0) or high (s=1) end
inline Cell cube_face(const Cube& q, int axis, int s) {
  Vec c = q.corner;
  if (s) c.c[axis] += q.side;
  return Cell(c, q.side, full_span(q.dim()) & ~(1u << axis));
}

// unit (n-1)-face normal to `axis` sitting at lattice point `corner`
inline Cell unit_face(const Vec& corner, int axis) {
  return Cell(corner, 1, full_span(corner.n) & ~(1u << axis));
}

}  // namespace rickman

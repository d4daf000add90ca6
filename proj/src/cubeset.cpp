#include "rickman/cubeset.hpp"

#include <unordered_set>

namespace rickman {

CubeSet::CubeSet(std::vector<Cube> cubes, bool validate) : cubes_(std::move(cubes)) {
  std::sort(cubes_.begin(), cubes_.end());
  cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
  if (validate) {
    for (size_t i = 0; i < cubes_.size(); ++i)
      for (size_t j = i + 1; j < cubes_.size(); ++j)
        if (overlaps(cubes_[i], cubes_[j]))
          throw err("CubeSet: overlapping interiors " + cubes_[i].str() + " / " + cubes_[j].str());
  }
}

i128 CubeSet::volume() const {
  i128 v = 0;
  for (const Cube& c : cubes_) {
    i128 p = 1;
    for (int i = 0; i < c.dim(); ++i) p *= c.side;
    v += p;
  }
  return v;
}

std::vector<Cube> CubeSet::unit_cubes() const {
  std::vector<Cube> out;
  for (const Cube& c : cubes_) {
    if (c.side < 1) throw err("unit_cubes: sub-unit cube");
    Vec it = c.corner;
    const int n = c.dim();
    while (true) {
      out.push_back(Cube(it, 1));
      int a = 0;
      for (; a < n; ++a) {
        if (++it.c[a] < c.corner[a] + c.side) break;
        it.c[a] = c.corner[a];
      }
      if (a == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubeSet CubeSet::subdivide(Level level) const {
  const i64 target = level == Level::three_fine ? 3 : 1;
  std::vector<Cube> out;
  for (const Cube& c : cubes_) {
    if (c.side < target || c.side % target != 0)
      throw err("subdivide: fineness violation at cube " + c.str());
    i64 k = c.side / target;
    const int n = c.dim();
    Vec it = Vec(n);
    while (true) {
      Vec corner = c.corner;
      for (int i = 0; i < n; ++i) corner.c[i] += it[i] * target;
      out.push_back(Cube(corner, target));
      int a = 0;
      for (; a < n; ++a) {
        if (++it.c[a] < k) break;
        it.c[a] = 0;
      }
      if (a == n) break;
    }
  }
  return CubeSet(std::move(out), false);
}

i64 CubeSet::fineness() const {
  if (cubes_.empty()) return 1;
  i64 g = 0;
  for (const Cube& c : cubes_) g = std::gcd(g, c.side);
  i64 r = 1;
  while (r * 3 <= g && g % (r * 3) == 0) r *= 3;
  // A candidate tiling of side r must have a cube cornered at the lex-least
  // unit cube of the set; check that offset covers everything.
  auto units = unit_cubes();
  std::unordered_set<Vec, VecHash> have;
  for (const Cube& u : units) have.insert(u.corner);
  while (r > 1) {
    const Vec& base = units.front().corner;
    bool ok = true;
    for (const Cube& u : units) {
      Vec a = u.corner;
      for (int i = 0; i < a.n; ++i) a.c[i] = base[i] + align_down(a[i] - base[i], r);
      // the whole side-r cube at `a` must be present
      Vec it = Vec(a.n);
      for (bool done = false; !done && ok;) {
        Vec p = a;
        for (int i = 0; i < a.n; ++i) p.c[i] += it[i];
        if (!have.count(p)) ok = false;
        int ax = 0;
        for (; ax < a.n; ++ax) {
          if (++it.c[ax] < r) break;
          it.c[ax] = 0;
        }
        done = (ax == a.n);
      }
      if (!ok) break;
    }
    if (ok) return r;
    r /= 3;
  }
  return 1;
}

bool CubeSet::same_set(const CubeSet& other) const {
  return unit_cubes() == other.unit_cubes();
}

bool CubeSet::contains_cube(const Cube& c) const {
  for (const Cube& q : cubes_)
    if (q.contains(c)) return true;
  return false;
}

CubeSet CubeSet::scaled(i64 s) const {
  std::vector<Cube> out;
  out.reserve(cubes_.size());
  for (const Cube& c : cubes_) out.push_back(c.scaled(s));
  return CubeSet(std::move(out), false);
}

CubeSet CubeSet::translated(const Vec& v) const {
  std::vector<Cube> out;
  out.reserve(cubes_.size());
  for (const Cube& c : cubes_) out.push_back(Cube(c.corner + v, c.side));
  return CubeSet(std::move(out), false);
}

}  // namespace rickman

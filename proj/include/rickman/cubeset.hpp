#pragma once

#include <algorithm>

#include "rickman/cube.hpp"

namespace rickman {

// A finite cubical n-set stored as pairwise essentially disjoint cubes.
// This is the light value type used for atoms, regions and test fixtures;
// whole partitions live in Grid3.
class CubeSet {
 public:
  CubeSet() = default;
  explicit CubeSet(std::vector<Cube> cubes, bool validate = true);

  static CubeSet box(const Cube& c) { return CubeSet({c}, false); }

  const std::vector<Cube>& cubes() const { return cubes_; }
  bool empty() const { return cubes_.empty(); }
  int dim() const { return cubes_.empty() ? 0 : cubes_[0].dim(); }
  i128 volume() const;

  std::vector<Cube> unit_cubes() const;

  enum class Level { three_fine, unit };
  // exact subdivision into side-3 (three_fine) or unit cubes
  CubeSet subdivide(Level level) const;

  // largest power of 3 admitting a face-to-face tiling of the set
  i64 fineness() const;

  bool same_set(const CubeSet& other) const;
  bool contains_cube(const Cube& c) const;

  CubeSet scaled(i64 s) const;
  CubeSet translated(const Vec& v) const;

 private:
  std::vector<Cube> cubes_;
};

}  // namespace rickman

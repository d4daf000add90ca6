#pragma once

#include <map>
#include <vector>

#include "rickman/cube.hpp"

namespace rickman {

constexpr int kMixed = -1000;
constexpr int kOutside = -1;

// 3-adic label tree over top-level cubes of side `top_side` (a power of 3).
// Leaves are maximal monochromatic cubes; children coalesce automatically on
// write. This is the hierarchical store every partition lives in.
class Grid3 {
 public:
  Grid3() = default;
  Grid3(int n, i64 top_side);

  int dim() const { return n_; }
  i64 top_side() const { return top_; }
  int fanout() const { return fan_; }

  void set_cube(const Cube& c, int label);    // c 3-adic aligned, side power of 3
  int label_unit(const Vec& corner) const;    // kOutside beyond the roots
  int label_cube(const Cube& c) const;        // kMixed if not uniform

  // multiply all coordinates by 3 (tree shape is scale-free)
  void scale3();

  template <class F>
  void for_each_leaf(F&& f) const {
    for (const auto& [corner, e] : roots_) walk(e, Cube(corner, top_), f);
  }
  template <class F>
  void for_each_leaf_in(const Cube& window, F&& f) const {
    for (const auto& [corner, e] : roots_) {
      Cube rc(corner, top_);
      if (meets(rc, window)) walk_in(e, rc, window, f);
    }
  }

  std::vector<Cube> root_cubes() const;
  bool equal_in(const Grid3& other, const Cube& box) const;
  i64 node_count() const { return static_cast<i64>(chunks_.size()); }

 private:
  friend class GridIO;
  int n_ = 0;
  i64 top_ = 0;
  int fan_ = 0;  // 3^n
  std::map<Vec, i32> roots_;
  std::vector<i32> chunks_;  // fan_ entries per chunk
  std::vector<i32> free_;

  static i32 leaf_entry(int label) { return -(label + 2); }
  static int entry_label(i32 e) { return -e - 2; }
  static bool is_leaf(i32 e) { return e < 0; }

  i32 alloc_chunk(i32 fill);
  void free_chunk(i32 id);
  int child_index(const Vec& cell_corner, const Vec& node_corner, i64 child_side) const;
  Cube child_cube(const Cube& node, int idx) const;

  i32 set_rec(i32 entry, const Cube& node, const Cube& target, int label);
  int uniform_label(i32 entry, const Cube& node, const Cube& target) const;

  template <class F>
  void walk(i32 e, const Cube& node, F&& f) const {
    if (is_leaf(e)) {
      int l = entry_label(e);
      if (l != kOutside) f(node, l);
      return;
    }
    for (int i = 0; i < fan_; ++i) walk(chunks_[static_cast<size_t>(e) * fan_ + i], child_cube(node, i), f);
  }
  template <class F>
  void walk_in(i32 e, const Cube& node, const Cube& window, F&& f) const {
    if (is_leaf(e)) {
      int l = entry_label(e);
      if (l != kOutside) f(node, l);
      return;
    }
    for (int i = 0; i < fan_; ++i) {
      Cube cc = child_cube(node, i);
      if (meets(cc, window)) walk_in(chunks_[static_cast<size_t>(e) * fan_ + i], cc, window, f);
    }
  }
};

}  // namespace rickman

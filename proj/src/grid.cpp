#include "rickman/grid.hpp"

namespace rickman {

Grid3::Grid3(int n, i64 top_side) : n_(n), top_(top_side) {
  if (n < 1 || n > kMaxDim) throw err("Grid3: bad dimension");
  if (!is_pow3(top_side)) throw err("Grid3: top side must be a power of 3");
  fan_ = 1;
  for (int i = 0; i < n; ++i) fan_ *= 3;
}

i32 Grid3::alloc_chunk(i32 fill) {
  i32 id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<i32>(chunks_.size() / fan_);
    chunks_.resize(chunks_.size() + fan_);
  }
  for (int i = 0; i < fan_; ++i) chunks_[static_cast<size_t>(id) * fan_ + i] = fill;
  return id;
}

void Grid3::free_chunk(i32 id) { free_.push_back(id); }

int Grid3::child_index(const Vec& cell_corner, const Vec& node_corner, i64 child_side) const {
  int idx = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    i64 o = fdiv(cell_corner[i] - node_corner[i], child_side);
    idx = idx * 3 + static_cast<int>(o);
  }
  return idx;
}

Cube Grid3::child_cube(const Cube& node, int idx) const {
  Cube c(node.corner, node.side / 3);
  for (int i = 0; i < n_; ++i) {
    c.corner.c[i] += (idx % 3) * c.side;
    idx /= 3;
  }
  return c;
}

void Grid3::set_cube(const Cube& c, int label) {
  if (c.dim() != n_) throw err("Grid3::set_cube: dimension mismatch");
  Vec rc = c.corner;
  for (int i = 0; i < n_; ++i) rc.c[i] = align_down(rc[i], top_);
  Cube root(rc, top_);
  if (!root.contains(c)) throw err("Grid3::set_cube: cube not 3-adic aligned: " + c.str());
  auto it = roots_.find(rc);
  i32 e = (it == roots_.end()) ? leaf_entry(kOutside) : it->second;
  roots_[rc] = set_rec(e, root, c, label);
}

i32 Grid3::set_rec(i32 entry, const Cube& node, const Cube& target, int label) {
  if (node == target) {
    if (!is_leaf(entry)) free_chunk(entry);  // children become garbage
    return leaf_entry(label);
  }
  i32 chunk;
  if (is_leaf(entry)) {
    if (entry_label(entry) == label) return entry;
    chunk = alloc_chunk(entry);
  } else {
    chunk = entry;
  }
  int idx = child_index(target.corner, node.corner, node.side / 3);
  Cube cc = child_cube(node, idx);
  if (!cc.contains(target)) throw err("Grid3::set_cube: misaligned cube " + target.str());
  size_t base = static_cast<size_t>(chunk) * fan_;
  chunks_[base + idx] = set_rec(chunks_[base + idx], cc, target, label);
  // coalesce
  i32 first = chunks_[base];
  if (is_leaf(first)) {
    bool all = true;
    for (int i = 1; i < fan_ && all; ++i) all = chunks_[base + i] == first;
    if (all) {
      free_chunk(chunk);
      return first;
    }
  }
  return chunk;
}

int Grid3::label_unit(const Vec& corner) const {
  Vec rc = corner;
  for (int i = 0; i < n_; ++i) rc.c[i] = align_down(rc[i], top_);
  auto it = roots_.find(rc);
  if (it == roots_.end()) return kOutside;
  i32 e = it->second;
  Cube node(rc, top_);
  while (!is_leaf(e)) {
    int idx = child_index(corner, node.corner, node.side / 3);
    node = child_cube(node, idx);
    e = chunks_[static_cast<size_t>(e) * fan_ + idx];
  }
  return entry_label(e);
}

int Grid3::uniform_label(i32 entry, const Cube& node, const Cube& target) const {
  if (is_leaf(entry)) return entry_label(entry);
  if (node.side == 1) return entry_label(entry);
  int out = kMixed + 1;  // sentinel: unset
  for (int i = 0; i < fan_; ++i) {
    Cube cc = child_cube(node, i);
    if (!overlaps(cc, target)) continue;
    Cube sub = cc;
    // clip target to child (both 3-adic: child either inside target or contains it)
    if (!target.contains(cc)) sub = target;
    int l = uniform_label(chunks_[static_cast<size_t>(entry) * fan_ + i], cc, sub);
    if (l == kMixed) return kMixed;
    if (out == kMixed + 1) out = l;
    else if (out != l) return kMixed;
  }
  return out == kMixed + 1 ? kOutside : out;
}

int Grid3::label_cube(const Cube& c) const {
  Vec rc = c.corner;
  for (int i = 0; i < n_; ++i) rc.c[i] = align_down(rc[i], top_);
  auto it = roots_.find(rc);
  if (it == roots_.end()) return kOutside;
  Cube root(rc, top_);
  if (!root.contains(c)) throw err("Grid3::label_cube: misaligned cube " + c.str());
  return uniform_label(it->second, root, c);
}

void Grid3::scale3() {
  std::map<Vec, i32> nr;
  for (const auto& [corner, e] : roots_) nr[3 * corner] = e;
  roots_ = std::move(nr);
  top_ *= 3;
}

std::vector<Cube> Grid3::root_cubes() const {
  std::vector<Cube> out;
  for (const auto& [corner, e] : roots_) {
    (void)e;
    out.push_back(Cube(corner, top_));
  }
  return out;
}

bool Grid3::equal_in(const Grid3& other, const Cube& box) const {
  // exact label equality over every unit cube of the aligned cube `box`,
  // by lockstep descent over both trees
  int la = (box.side <= top_) ? label_cube(box) : kMixed;
  int lb = (box.side <= other.top_) ? other.label_cube(box) : kMixed;
  if (la != kMixed && lb != kMixed) return la == lb;
  if (box.side == 1) return la == lb;
  int fan = 1;
  for (int i = 0; i < n_; ++i) fan *= 3;
  for (int idx = 0; idx < fan; ++idx) {
    Cube cc(box.corner, box.side / 3);
    int t = idx;
    for (int i = 0; i < n_; ++i) {
      cc.corner.c[i] += (t % 3) * cc.side;
      t /= 3;
    }
    if (!equal_in(other, cc)) return false;
  }
  return true;
}

}  // namespace rickman

#include "rickman/hausdorff.hpp"

#include <unordered_map>
#include <unordered_set>

namespace rickman {

i64 dist2_point_cell(const Vec& p2, const Cell& c) {
  i64 d = 0;
  for (int i = 0; i < c.ambient(); ++i) {
    i64 lo2 = 2 * c.lo(i), hi2 = 2 * c.hi(i);
    d = std::max(d, std::max(lo2 - p2[i], p2[i] - hi2));
  }
  return d < 0 ? 0 : d;
}

namespace {

// split cells into side<=1 pieces so candidate enumeration stays dense
std::vector<Cell> unit_pieces(const std::vector<Cell>& cells) {
  std::vector<Cell> out;
  for (const Cell& c : cells) {
    if (c.side <= 1) {
      out.push_back(c);
      continue;
    }
    const int n = c.ambient();
    Vec it(n);
    while (true) {
      bool ok = true;
      Cell piece(c.corner, 1, c.span);
      for (int i = 0; i < n; ++i) {
        if (!c.spans(i) && it[i] > 0) ok = false;
        piece.corner.c[i] = c.corner[i] + it[i];
      }
      if (ok) out.push_back(piece);
      int a = 0;
      for (; a < n; ++a) {
        if (++it.c[a] < (c.spans(a) ? c.side : 1)) break;
        it.c[a] = 0;
      }
      if (a == n) break;
    }
  }
  return out;
}

void candidate_points(const Cell& c, std::vector<Vec>& out) {
  const int n = c.ambient();
  Vec it(n);
  while (true) {
    Vec p(n);
    for (int i = 0; i < n; ++i) p.c[i] = 2 * c.lo(i) + it[i];
    out.push_back(p);
    int a = 0;
    for (; a < n; ++a) {
      i64 extent = 2 * (c.hi(a) - c.lo(a));
      if (++it.c[a] <= extent) break;
      it.c[a] = 0;
    }
    if (a == n) break;
  }
}

struct BucketIndex {
  static constexpr i64 kSide = 32;  // doubled coordinates
  std::unordered_map<Vec, std::vector<int>, VecHash> buckets;
  const std::vector<Cell>* cells = nullptr;
  int n = 0;

  explicit BucketIndex(const std::vector<Cell>& cs) : cells(&cs) {
    n = cs.empty() ? 0 : cs[0].ambient();
    for (size_t i = 0; i < cs.size(); ++i) insert(static_cast<int>(i));
  }
  void insert(int id) {
    const Cell& c = (*cells)[id];
    Vec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      lo.c[i] = fdiv(2 * c.lo(i), kSide);
      hi.c[i] = fdiv(2 * c.hi(i), kSide);
    }
    Vec it = lo;
    while (true) {
      buckets[it].push_back(id);
      int a = 0;
      for (; a < n; ++a) {
        if (++it.c[a] <= hi[a]) break;
        it.c[a] = lo[a];
      }
      if (a == n) break;
    }
  }
  // exact min distance from p2 by expanding window search
  i64 min_dist(const Vec& p2) const {
    i64 radius = kSide;
    std::unordered_set<int> seen;
    while (true) {
      i64 best = -1;
      Vec lo(n), hi(n);
      for (int i = 0; i < n; ++i) {
        lo.c[i] = fdiv(p2[i] - radius, kSide);
        hi.c[i] = fdiv(p2[i] + radius, kSide);
      }
      Vec it = lo;
      while (true) {
        auto f = buckets.find(it);
        if (f != buckets.end())
          for (int id : f->second) {
            i64 d = dist2_point_cell(p2, (*cells)[id]);
            if (best < 0 || d < best) best = d;
          }
        int a = 0;
        for (; a < n; ++a) {
          if (++it.c[a] <= hi[a]) break;
          it.c[a] = lo[a];
        }
        if (a == n) break;
      }
      if (best >= 0 && best <= radius) return best;
      radius *= 2;
      if (radius > (i64(1) << 50)) throw err("hausdorff: runaway search");
    }
  }
};

}  // namespace

std::vector<Cell> cells_of(const CubeSet& s) {
  std::vector<Cell> out;
  for (const Cube& c : s.cubes()) out.push_back(Cell(c.corner, c.side, full_span(c.dim())));
  return out;
}

Rat directed_hausdorff_sup(const std::vector<Cell>& from, const std::vector<Cell>& to) {
  if (from.empty() || to.empty()) throw err("hausdorff: empty input");
  auto pieces = unit_pieces(from);
  BucketIndex index(to);
  std::vector<Vec> pts;
  std::unordered_set<Vec, VecHash> seen;
  i64 best = 0;
  for (const Cell& c : pieces) {
    pts.clear();
    candidate_points(c, pts);
    for (const Vec& p : pts) {
      if (!seen.insert(p).second) continue;
      best = std::max(best, index.min_dist(p));
    }
  }
  return Rat(best, 2);
}

Rat hausdorff_sup(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  return rat_max(directed_hausdorff_sup(a, b), directed_hausdorff_sup(b, a));
}

Rat hausdorff_sup_bruteforce(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  if (a.empty() || b.empty()) throw err("hausdorff: empty input");
  auto dir = [](const std::vector<Cell>& from, const std::vector<Cell>& to) {
    auto pieces = unit_pieces(from);
    i64 best = 0;
    std::vector<Vec> pts;
    for (const Cell& c : pieces) {
      pts.clear();
      candidate_points(c, pts);
      for (const Vec& p : pts) {
        i64 mn = -1;
        for (const Cell& t : to) {
          i64 d = dist2_point_cell(p, t);
          if (mn < 0 || d < mn) mn = d;
        }
        best = std::max(best, mn);
      }
    }
    return Rat(best, 2);
  };
  return rat_max(dir(a, b), dir(b, a));
}

}  // namespace rickman

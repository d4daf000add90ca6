#pragma once

#include "rickman/cubeset.hpp"
#include "rickman/rat.hpp"

namespace rickman {

// Exact sup-metric (Chebyshev) distances between finite unions of axis-aligned
// cells. All extrema of x -> min_b dist(x, b) over a cubical set lie on the
// half-integer lattice (tie hyperplanes are x_i = c and ±x_i ± x_j = c), so
// maximization over doubled integer coordinates is exact.
i64 dist2_point_cell(const Vec& p2, const Cell& c);  // doubled coords

Rat directed_hausdorff_sup(const std::vector<Cell>& from, const std::vector<Cell>& to);
Rat hausdorff_sup(const std::vector<Cell>& a, const std::vector<Cell>& b);

// brute-force oracle (no spatial index), for tests
Rat hausdorff_sup_bruteforce(const std::vector<Cell>& a, const std::vector<Cell>& b);

std::vector<Cell> cells_of(const CubeSet& s);

}  // namespace rickman

#pragma once

#include "rickman/cubeset.hpp"

namespace rickman {

// Signed permutation of axes: x_i -> sign[i] * x_perm[i].
struct SignedPerm {
  std::array<int, kMaxDim> perm{};
  std::array<int, kMaxDim> sign{};  // +1 / -1
  int n = 0;

  Vec apply(const Vec& v) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = sign[i] * v[perm[i]];
    return r;
  }
};

// all 2^n n! elements of the hyperoctahedral group
std::vector<SignedPerm> hyperoctahedral_group(int n);

// Canonical form of a cubical set under hyperoctahedral group x translation:
// the lexicographically least list of unit-cube corners over all images,
// translated so the bounding box starts at the origin. Equal keys <=>
// congruent sets.
std::vector<Vec> congruence_key(const CubeSet& s);

// canonical key of a plain list of unit cubes
std::vector<Vec> congruence_key_units(std::vector<Vec> corners, int n);

}  // namespace rickman

#include "rickman/congruence.hpp"

#include <algorithm>

namespace rickman {

std::vector<SignedPerm> hyperoctahedral_group(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<SignedPerm> out;
  do {
    for (int smask = 0; smask < (1 << n); ++smask) {
      SignedPerm g;
      g.n = n;
      for (int i = 0; i < n; ++i) {
        g.perm[i] = p[i];
        g.sign[i] = (smask >> i) & 1 ? -1 : 1;
      }
      out.push_back(g);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Vec> congruence_key_units(std::vector<Vec> corners, int n) {
  if (corners.empty()) return {};
  std::vector<Vec> best;
  for (const SignedPerm& g : hyperoctahedral_group(n)) {
    std::vector<Vec> img;
    img.reserve(corners.size());
    for (const Vec& c : corners) {
      // image of the unit cube [c, c+1]: corner becomes min over the 2 ends
      Vec a = g.apply(c);
      for (int i = 0; i < n; ++i)
        if (g.sign[i] < 0) a.c[i] -= 1;
      img.push_back(a);
    }
    Vec lo = img[0];
    for (const Vec& v : img)
      for (int i = 0; i < n; ++i) lo.c[i] = std::min(lo.c[i], v[i]);
    for (Vec& v : img) v = v - lo;
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::vector<Vec> congruence_key(const CubeSet& s) {
  std::vector<Vec> corners;
  for (const Cube& u : s.unit_cubes()) corners.push_back(u.corner);
  return congruence_key_units(std::move(corners), s.dim());
}

}  // namespace rickman

#pragma once

// Independent p=2 oracle: products in G_2(Poly_d) via the Pieri rule only.
// A class (a,b) factors as sigma_(b,b) * sigma_(a-b,0); multiplying by
// sigma_(c,c) shifts both rows, multiplying by sigma_(m,0) adds a
// horizontal strip.  No Littlewood-Richardson tableaux anywhere.

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Class2 = std::pair<int, int>;
using Expansion2 = std::map<Class2, long>;

inline Expansion2 pieri2_times(const Expansion2& e, Class2 v, int width) {
  const int strip = v.first - v.second;
  const int shift = v.second;
  Expansion2 out;
  for (const auto& [cls, coef] : e) {
    int a = cls.first + shift, b = cls.second + shift;
    if (a > width) continue;
    // add `strip` boxes, no two in one column: a' >= a >= b' >= b, b' <= a
    for (int add_top = 0; add_top <= strip; ++add_top) {
      int a2 = a + add_top, b2 = b + (strip - add_top);
      if (a2 > width || b2 > a || a2 < b2) continue;
      out[{a2, b2}] += coef;
    }
  }
  return out;
}

inline long pieri2_intersection(const std::vector<Class2>& ws, int d) {
  const int width = d - 1;
  long codim = 0;
  for (auto [a, b] : ws) codim += a + b;
  if (codim != 2L * width) return 0;
  Expansion2 acc;
  acc[{0, 0}] = 1;
  for (auto w : ws) acc = pieri2_times(acc, w, width);
  auto it = acc.find({width, width});
  return it == acc.end() ? 0 : it->second;
}

}  // namespace oracle

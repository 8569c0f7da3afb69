#pragma once

#include "alcove/torus.hpp"

namespace alcove {

// Fiber of the extended quotient over the image of t in the plain quotient:
// one point per conjugacy class of the stabilizer of t.
struct ExtQuotFiber {
  TorusPoint orbit_representative;
  uint64_t stabilizer_order = 0;
  uint64_t class_count = 0;
  bool abelian = true;
  std::string method;
};

ExtQuotFiber fiber(const RootSystem& rs, const TorusPoint& t, uint64_t cap = 1000000);

// One entry per conjugacy class: the fixed subtorus of a representative, its
// dimension and component count, and the order of the centralizer acting on it.
struct ExtQuotComponent {
  size_t class_index = 0;
  IMat class_rep;
  std::vector<int> rep_word;
  uint64_t class_size = 0;
  uint64_t centralizer_order = 0;
  int fixed_dim = 0;
  Int fixed_pi0;
};

std::vector<ExtQuotComponent> components(const RootSystem& rs,
                                         uint64_t cap = 1000000);

// Brute-force cardinality of the fiber: enumerate all pairs (w, s) with s in
// the orbit of t and w fixing s, then count orbits of the simultaneous
// action. Deliberately avoids the stabilizer-class shortcut it cross-checks.
uint64_t extquot_point_count_over_orbit(const RootSystem& rs, const TorusPoint& t,
                                        uint64_t cap = 1000000);

// Number of grid-division points of the torus fixed by w: brute force count
// versus the count forced by the elementary divisors of (1 - w).
uint64_t fixed_points_on_grid(const RootSystem& rs, const IMat& w, long grid);
Int predicted_fixed_points(const RootSystem& rs, const IMat& w, long grid);

}  // namespace alcove

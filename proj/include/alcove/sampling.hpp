#pragma once

#include <cstdint>
#include <random>

#include "alcove/torus.hpp"

namespace alcove {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and bounded draws use rejection sampling rather than the distribution
// classes, whose streams vary between library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t n);             // uniform in [0, n)
  int64_t range(int64_t lo, int64_t hi);  // uniform inclusive

 private:
  std::mt19937_64 eng_;
};

// Torus point whose coweight coordinates share one denominator <= max_den.
TorusPoint sample_torus_point(Rng& rng, const RootSystem& rs, long max_den);

// Rational in [0, 1] with denominator <= max_den.
Rat sample_unit_rat(Rng& rng, long max_den);

// Strictly interior alcove point in general position: a convex combination of
// the vertices with positive, pairwise-distinct weights, so no nontrivial
// alcove symmetry fixes it.
RatVec sample_interior_point(Rng& rng, const Alcove& a, long max_weight);

// Point of the closed alcove (weights may vanish).
RatVec sample_alcove_point(Rng& rng, const Alcove& a, long max_weight);

// Unconstrained ambient point with moderate coordinates.
RatVec sample_ambient_point(Rng& rng, int n, long max_den, long spread);

// Random element of the plain affine group: a word in the wall reflections
// followed by a coroot translation.
AffineMap sample_affine_element(Rng& rng, const RootSystem& rs, int word_len,
                                long spread);

}  // namespace alcove

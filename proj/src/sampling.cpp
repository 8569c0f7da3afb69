#include "alcove/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcove {

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
  const uint64_t limit = 0 - rem;                 // first rejected value
  while (true) {
    uint64_t v = next();
    if (rem == 0 || v < limit) return v % n;
  }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
}

TorusPoint sample_torus_point(Rng& rng, const RootSystem& rs, long max_den) {
  const long q = 1 + static_cast<long>(rng.below(static_cast<uint64_t>(max_den)));
  RatVec c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    c[i] = rat(static_cast<long>(rng.below(static_cast<uint64_t>(q))), q);
  return TorusPoint(rs, rs.from_coweight_coords(c));
}

Rat sample_unit_rat(Rng& rng, long max_den) {
  const long q = 1 + static_cast<long>(rng.below(static_cast<uint64_t>(max_den)));
  const long p = static_cast<long>(rng.below(static_cast<uint64_t>(q) + 1));
  return rat(p, q);
}

static RatVec weighted_vertex_mix(Rng& rng, const Alcove& a, long lo, long hi) {
  RatVec x = zero_vec(static_cast<int>(a.barycenter.size()));
  long total = 0;
  std::vector<long> w(a.vertices.size());
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    w[i] = rng.range(lo, hi);
    total += w[i];
  }
  if (total == 0) return a.barycenter;
  for (size_t i = 0; i < a.vertices.size(); ++i)
    x = x + rat(w[i], total) * a.vertices[i];
  return x;
}

RatVec sample_interior_point(Rng& rng, const Alcove& a, long max_weight) {
  // Pairwise-distinct weights keep the point off every symmetry axis of the
  // simplex: a vertex permutation fixes a barycentric combination only if the
  // weights are constant along its cycles.
  const long m = static_cast<long>(a.vertices.size());
  const long hi = std::max(max_weight, 2 * m);
  while (true) {
    std::vector<long> w(a.vertices.size());
    for (auto& wi : w) wi = rng.range(1, hi);
    std::vector<long> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;
    long total = 0;
    for (long wi : w) total += wi;
    RatVec x = zero_vec(static_cast<int>(a.barycenter.size()));
    for (size_t i = 0; i < a.vertices.size(); ++i)
      x = x + rat(w[i], total) * a.vertices[i];
    return x;
  }
}

RatVec sample_alcove_point(Rng& rng, const Alcove& a, long max_weight) {
  return weighted_vertex_mix(rng, a, 0, max_weight);
}

RatVec sample_ambient_point(Rng& rng, int n, long max_den, long spread) {
  RatVec x(n);
  for (int i = 0; i < n; ++i) {
    const long q = 1 + static_cast<long>(rng.below(static_cast<uint64_t>(max_den)));
    x[i] = rat(rng.range(-spread * q, spread * q), q);
  }
  return x;
}

AffineMap sample_affine_element(Rng& rng, const RootSystem& rs, int word_len,
                                long spread) {
  const int n = rs.rank();
  const Root& theta = rs.highest_root();
  RatVec theta_covec(n);
  for (int k = 0; k < n; ++k) theta_covec[k] = Rat(static_cast<long>(theta.coroot[k]));

  AffineMap m = identity_map(n);
  const int len = static_cast<int>(rng.below(static_cast<uint64_t>(word_len) + 1));
  for (int s = 0; s < len; ++s) {
    const int pick = static_cast<int>(rng.below(static_cast<uint64_t>(n) + 1));
    AffineMap step =
        pick < n
            ? AffineMap{zero_vec(n), rs.simple_reflection(pick), LatticeTag::coroot}
            : AffineMap{theta_covec, rs.reflection(theta), LatticeTag::coroot};
    m = compose(step, m);
  }
  RatVec gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = Rat(rng.range(-spread, spread));
  return compose(translation_map(gamma, LatticeTag::coroot), m);
}

}  // namespace alcove

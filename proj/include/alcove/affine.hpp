#pragma once

#include "alcove/abelian.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

enum class LatticeTag { coroot, coweight };

// x maps to translation + linear * x. The tag records the smallest standard
// lattice the translation part is known to lie in.
struct AffineMap {
  RatVec translation;
  IMat linear;
  LatticeTag lattice = LatticeTag::coroot;

  RatVec operator()(const RatVec& x) const;
  bool same_map(const AffineMap& o) const {
    return translation == o.translation && linear == o.linear;
  }
};

AffineMap identity_map(int n);
AffineMap translation_map(const RatVec& gamma, LatticeTag tag);
AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
AffineMap inverse(const AffineMap& f);
bool translation_in_tagged_lattice(const RootSystem& rs, const AffineMap& f);

struct Alcove {
  std::vector<RatVec> vertices;  // v0 is the origin, vi = coweight_i / mark_i
  RatVec barycenter;
};

Alcove fundamental_alcove(const RootSystem& rs);
bool in_closed_alcove(const RootSystem& rs, const RatVec& x);
bool in_open_alcove(const RootSystem& rs, const RatVec& x);

// Straight-line retraction toward the barycenter: s = 0 is the identity,
// s = 1 collapses everything to the barycenter.
RatVec retract(const Alcove& a, const RatVec& x, const Rat& s);

struct ReduceResult {
  RatVec point;    // representative inside the closed alcove
  AffineMap map;   // group element with map(input) == point
  uint64_t steps;  // reflections applied
};

// Walks x into the closed fundamental alcove by reflecting across the first
// violated wall (simple walls in index order, then the affine wall). Ties on
// a wall are broken by a companion direction so the result is the limit of
// reducing x + eps * barycenter; this makes the representative canonical.
ReduceResult reduce_to_alcove(const RootSystem& rs, const RatVec& x);

// Stabilizer of the fundamental alcove inside the extended affine group:
// the translation-by-coweights extension quotient, realized concretely as
// affine maps permuting the alcove.
struct AlcoveStabilizer {
  std::vector<AffineMap> elements;              // identity first
  std::vector<std::vector<int>> vertex_perm;    // action on alcove vertices
  CayleyTable table;
  FiniteAbelianGroup structure;
};

AlcoveStabilizer alcove_stabilizer(const RootSystem& rs);

}  // namespace alcove

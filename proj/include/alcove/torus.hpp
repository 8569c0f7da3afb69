#pragma once

#include <optional>

#include "alcove/affine.hpp"

namespace alcove {

// Point of the compact torus t / (coweight lattice). The canonical
// representative has coweight coordinates in [0, 1).
class TorusPoint {
 public:
  TorusPoint(const RootSystem& rs, const RatVec& coroot_coords);

  const RatVec& coords() const { return coords_; }     // simple-coroot basis
  const RatVec& cw_coords() const { return cw_; }      // coweight basis, in [0,1)
  bool operator==(const TorusPoint& o) const { return cw_ == o.cw_; }

 private:
  RatVec coords_;
  RatVec cw_;
};

// exp of the alcove barycenter.
TorusPoint special_point(const RootSystem& rs);

TorusPoint act(const RootSystem& rs, const IMat& w, const TorusPoint& t);

struct OrbitStabilizer {
  uint64_t orbit_size = 0;
  std::vector<IMat> stabilizer;
};

// Enumerates the orbit of t breadth-first over scaled integer coordinates and
// pulls the stabilizer out of the Schreier generators of the orbit graph,
// stopping as soon as the order forced by orbit size is reached.
OrbitStabilizer orbit_stabilizer(const RootSystem& rs, const TorusPoint& t,
                                 uint64_t cap = 1000000);

struct StabilizerReport {
  uint64_t order = 0;
  bool abelian = true;
  std::optional<FiniteAbelianGroup> structure;  // abelian and small enough
  uint64_t class_count = 0;
  std::vector<IMat> elements;
  std::string method;  // "orbit-bfs" or "alcove"
  uint64_t orbit_size = 0;
};

StabilizerReport stabilizer_direct(const RootSystem& rs, const TorusPoint& t,
                                   uint64_t cap = 1000000);

// Same subgroup, computed from the alcove picture: reduce into the closed
// alcove, take reflections in the walls through the reduced point together
// with alcove symmetries fixing it, then conjugate back.
StabilizerReport stabilizer_alcove(const RootSystem& rs, const TorusPoint& t,
                                   uint64_t cap = 1000000);

// Checks that w -> (x0 - w x0, w) identifies the stabilizer of exp(x0) in the
// finite group with the alcove stabilizer, as groups.
struct BarycenterCheck {
  bool ok = false;
  uint64_t order = 0;
  std::string method;
  std::vector<std::string> failures;
};

BarycenterCheck verify_barycenter_stabilizer(const RootSystem& rs, uint64_t cap = 1000000);

}  // namespace alcove

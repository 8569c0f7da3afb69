#pragma once

#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/snf.hpp"

namespace alcove {

// A root, stored three ways: coefficients over the simple roots, the
// corresponding coroot over the simple coroots, and the functional row that
// evaluates the root on a point given in simple-coroot coordinates.
struct Root {
  std::vector<int64_t> coeffs;
  std::vector<int64_t> coroot;
  std::vector<int64_t> functional;

  int64_t height() const;
  bool operator==(const Root&) const = default;
};

// Basis conventions used throughout the library:
//  * points of the ambient space carry simple-coroot coordinates x;
//  * the j-th simple root evaluates as (C^T x)_j;
//  * c = C^T x are the fundamental-coweight coordinates, so the coweight
//    lattice is exactly Z^n in c and the coroot lattice is C^T Z^n.
class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const IMat& cartan_t() const { return cartan_t_; }
  const RatMat& cartan_t_inv() const { return cartan_t_inv_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_[highest_]; }
  const std::vector<int64_t>& marks() const { return highest_root().coeffs; }
  // Fundamental coweights in simple-coroot coordinates.
  const std::vector<RatVec>& fundamental_coweights() const { return coweights_; }

  Int connection_index() const;
  InvariantFactors fundamental_group() const;

  RatVec to_coweight_coords(const RatVec& x) const;
  RatVec from_coweight_coords(const RatVec& c) const;
  Rat eval_root(const Root& r, const RatVec& x) const;
  bool in_coroot_lattice(const RatVec& x) const;
  bool in_coweight_lattice(const RatVec& x) const;

  // Reflections as matrices acting on simple-coroot coordinates.
  IMat simple_reflection(int i) const;
  std::vector<IMat> simple_reflections() const;
  IMat reflection(const Root& r) const;
  // Same operator rewritten in coweight coordinates; always integral there.
  IMat coweight_conjugate(const IMat& m) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  IMat cartan_t_;
  RatMat cartan_t_inv_;
  std::vector<Root> positive_;
  size_t highest_ = 0;
  std::vector<RatVec> coweights_;
};

struct Lattice {
  std::string name;             // "coroot" or "coweight"
  std::vector<RatVec> basis;    // in simple-coroot coordinates
  RatMat to_basis;              // coordinates of a point over that basis

  bool contains(const RatVec& x) const;
};

Lattice coroot_lattice(const RootSystem& rs);
Lattice coweight_lattice(const RootSystem& rs);

// Number of positive roots, from the closed-form count per series.
uint64_t positive_root_count(const CartanType& t);

}  // namespace alcove

#pragma once

#include "alcove/extquot.hpp"

namespace alcove {

// A multiplicative character of a finite abelian group, tabulated by exact
// exponents: the value on element g is exp(2 pi i * exponents[g]). Group
// elements are the factor tuples in odometer order.
struct Character {
  std::vector<Rat> exponents;
};

std::vector<Character> character_table(const FiniteAbelianGroup& g);

// Exact orthogonality of rows: the pointwise quotient of two distinct
// characters takes each value k/m equally often, so its value sum vanishes;
// the quotient with itself is identically zero. No floating point involved.
bool characters_orthogonal(const FiniteAbelianGroup& g,
                           const std::vector<Character>& table);

struct KReport {
  CartanType type;
  Int connection_index;       // |det| of the Cartan matrix
  Int lattice_quotient_order; // torsion order of coker of the transpose
  uint64_t k0_rank = 0;       // characters of the alcove symmetry group
  uint64_t k1_rank = 0;
  std::string k1_method;      // "cited-theorem": imported, not recomputed
  uint64_t l_packet_size = 0; // stabilizer order at the special point
  uint64_t generator_count = 0;  // special vertices of the alcove
  bool point_k_theory = false;   // trivial symmetry group: same K-theory as a point

  KReport() : type(Series::A, 1) {}
};

KReport k_groups_spherical(const RootSystem& rs, uint64_t cap = 1000000);

// Order of the stabilizer of the special point, checked abelian.
uint64_t l_packet_size(const RootSystem& rs, uint64_t cap = 1000000);

// Vertices of the alcove lying on the coweight lattice: the origin plus the
// vertices at mark-1 coweights.
uint64_t generator_count(const RootSystem& rs);

}  // namespace alcove

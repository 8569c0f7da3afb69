#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/snf.hpp"

namespace alcove {

// Finite abelian group given by invariant factors d1 | d2 | ... , each > 1.
struct FiniteAbelianGroup {
  std::vector<Int> factors;

  Int order() const;
  bool trivial() const { return factors.empty(); }
  std::string name() const;
  bool operator==(const FiniteAbelianGroup&) const = default;
};

// Requires a finite cokernel (free_rank == 0).
FiniteAbelianGroup from_invariant_factors(const InvariantFactors& f);

// Cayley tables: table[i][j] is the index of g_i * g_j. The identity may sit
// at any index.
using CayleyTable = std::vector<std::vector<uint32_t>>;

uint32_t table_identity(const CayleyTable& t);
bool table_is_abelian(const CayleyTable& t);
uint64_t element_order(const CayleyTable& t, uint32_t x);

// Invariant factors of an abstract abelian group, derived from the table
// alone: split off a cyclic factor of maximal order and recurse on the
// quotient. Throws if the table is not abelian or not a group.
FiniteAbelianGroup abelian_structure(const CayleyTable& t);

// Conjugacy class count for an arbitrary finite group table.
uint64_t table_class_count(const CayleyTable& t);

}  // namespace alcove

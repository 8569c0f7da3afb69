#pragma once

#include <stdexcept>
#include <vector>

#include "alcove/matrix.hpp"

namespace alcove {

struct SingularMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cokernel shape of an integer matrix: torsion invariant factors (each > 1,
// consecutive ones divide) plus the rank of the free part.
struct InvariantFactors {
  std::vector<Int> factors;
  int free_rank = 0;

  Int torsion_order() const;
  bool operator==(const InvariantFactors&) const = default;
};

std::string factors_str(const InvariantFactors& f);

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithDecomposition {
  IntMatrix U, D, V;
};

SmithDecomposition smith_decompose(const IntMatrix& m);

// Structure of coker(M) where M maps Z^cols into Z^rows.
InvariantFactors smith_normal_form(const IntMatrix& m);

// Exact determinant by fraction-free elimination. Throws on non-square input.
Int det(const IntMatrix& m);

// Exact solution of M x = b. Throws SingularMatrix when M is not invertible.
RatVec solve_rational(const IntMatrix& m, const RatVec& b);

RatMat rat_inverse(const IntMatrix& m);
int rank_rational(RatMat w);

// Inverse of an integer matrix that is invertible over the integers.
IMat imat_inverse(const IMat& m);

}  // namespace alcove

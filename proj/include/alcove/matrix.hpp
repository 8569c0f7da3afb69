#pragma once

#include <cstdint>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Arbitrary-precision integer matrix, row major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);
bool is_identity(const IntMatrix& m);

// Rational matrix, row major.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const RatMat&) const = default;
};

RatMat to_rat(const IntMatrix& m);
RatMat mul(const RatMat& x, const RatMat& y);
RatVec matvec(const RatMat& m, const RatVec& v);

// Square machine-integer matrix. Weyl group elements in a fixed basis have
// small entries, so int64 is ample and far cheaper than mpz for enumeration.
struct IMat {
  int n = 0;
  std::vector<int64_t> a;

  IMat() = default;
  explicit IMat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

  int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  static IMat identity(int n);
  bool operator==(const IMat&) const = default;
};

IMat operator*(const IMat& x, const IMat& y);
std::vector<int64_t> matvec(const IMat& m, const std::vector<int64_t>& v);
RatVec matvec(const IMat& m, const RatVec& v);
bool is_identity(const IMat& m);
IntMatrix to_int_matrix(const IMat& m);
IMat to_imat(const IntMatrix& m);  // throws if an entry overflows int64
uint64_t fnv1a(const int16_t* data, size_t count);

}  // namespace alcove

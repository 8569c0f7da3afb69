#pragma once

#include <string>

#include "alcove/matrix.hpp"

namespace alcove {

enum class Series : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

// Irreducible type label. Admissible ranks: A n>=1, B n>=2, C n>=2, D n>=3,
// E 6..8, F 4, G 2. The low-rank coincidences C2=B2 and D3=A3 are accepted
// as input; canonical() folds them to one spelling.
struct CartanType {
  Series series;
  int rank;

  CartanType(Series s, int r);
  static CartanType parse(const std::string& text);  // "A2", "d4", "E 7"
  std::string name() const;
  CartanType canonical() const;
  bool operator==(const CartanType&) const = default;
  bool operator<(const CartanType& o) const {
    return series != o.series ? series < o.series : rank < o.rank;
  }
};

// Entries C[i][j] = value of the j-th simple root on the i-th simple coroot.
IntMatrix cartan_matrix(const CartanType& t);

}  // namespace alcove

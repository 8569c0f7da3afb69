#include "alcove/snf.hpp"

#include <algorithm>
#include <utility>

namespace alcove {

Int InvariantFactors::torsion_order() const {
  Int p = 1;
  for (const Int& d : factors) p *= d;
  return p;
}

std::string factors_str(const InvariantFactors& f) {
  if (f.factors.empty() && f.free_rank == 0) return "trivial";
  std::string s;
  for (const Int& d : f.factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.get_str();
  }
  for (int i = 0; i < f.free_rank; ++i) {
    if (!s.empty()) s += " x ";
    s += "Z";
  }
  return s;
}

SmithDecomposition smith_decompose(const IntMatrix& m) {
  const int r = m.rows, c = m.cols;
  SmithDecomposition s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& D = s.D;
  IntMatrix& U = s.U;
  IntMatrix& V = s.V;

  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c; ++k) std::swap(D.at(i, k), D.at(j, k));
    for (int k = 0; k < r; ++k) std::swap(U.at(i, k), U.at(j, k));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r; ++k) std::swap(D.at(k, i), D.at(k, j));
    for (int k = 0; k < c; ++k) std::swap(V.at(k, i), V.at(k, j));
  };
  auto row_addmul = [&](int i, int j, const Int& q) {
    for (int k = 0; k < c; ++k) D.at(i, k) += q * D.at(j, k);
    for (int k = 0; k < r; ++k) U.at(i, k) += q * U.at(j, k);
  };
  auto col_addmul = [&](int i, int j, const Int& q) {
    for (int k = 0; k < r; ++k) D.at(k, i) += q * D.at(k, j);
    for (int k = 0; k < c; ++k) V.at(k, i) += q * V.at(k, j);
  };
  auto row_negate = [&](int i) {
    for (int k = 0; k < c; ++k) D.at(i, k) = -D.at(i, k);
    for (int k = 0; k < r; ++k) U.at(i, k) = -U.at(i, k);
  };

  for (int t = 0; t < r && t < c; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j) {
          if (D.at(i, j) == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(D.at(i, j).get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = std::min(r, c);  // remaining block is zero
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      bool again = false;
      for (int i = t + 1; i < r; ++i) {
        if (D.at(i, t) == 0) continue;
        row_addmul(i, t, -Int(D.at(i, t) / D.at(t, t)));
        if (D.at(i, t) != 0) again = true;
      }
      for (int j = t + 1; j < c; ++j) {
        if (D.at(t, j) == 0) continue;
        col_addmul(j, t, -Int(D.at(t, j) / D.at(t, t)));
        if (D.at(t, j) != 0) again = true;
      }
      if (again) continue;

      bool divides_rest = true;
      for (int i = t + 1; i < r && divides_rest; ++i)
        for (int j = t + 1; j < c && divides_rest; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            row_addmul(t, i, 1);
            divides_rest = false;
          }
      if (divides_rest) break;
    }
  }
  for (int i = 0; i < r && i < c; ++i)
    if (D.at(i, i) < 0) row_negate(i);
  return s;
}

InvariantFactors smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s = smith_decompose(m);
  InvariantFactors f;
  int nonzero = 0;
  for (int i = 0; i < m.rows && i < m.cols; ++i) {
    const Int& d = s.D.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) f.factors.push_back(d);
  }
  f.free_rank = m.rows - nonzero;
  return f;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

// Gauss-Jordan on [M | rhs], returning M^{-1} * rhs.
static RatMat solve_many(const IntMatrix& m, const RatMat& rhs) {
  if (m.rows != m.cols) throw std::invalid_argument("expected square matrix");
  if (rhs.rows != m.rows) throw std::invalid_argument("rhs row count mismatch");
  const int n = m.rows, w = rhs.cols;
  RatMat aug(n, n + w);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(m.at(i, j));
    for (int j = 0; j < w; ++j) aug.at(i, n + j) = rhs.at(i, j);
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (aug.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw SingularMatrix("matrix is singular");
    if (p != col)
      for (int j = 0; j < n + w; ++j) std::swap(aug.at(col, j), aug.at(p, j));
    Rat inv = 1 / aug.at(col, col);
    for (int j = col; j < n + w; ++j) aug.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug.at(i, col) == 0) continue;
      Rat f = aug.at(i, col);
      for (int j = col; j < n + w; ++j) aug.at(i, j) -= f * aug.at(col, j);
    }
  }
  RatMat out(n, w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < w; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

RatVec solve_rational(const IntMatrix& m, const RatVec& b) {
  if (b.size() != static_cast<size_t>(m.rows))
    throw std::invalid_argument("rhs size mismatch");
  RatMat rhs(m.rows, 1);
  for (int i = 0; i < m.rows; ++i) rhs.at(i, 0) = b[i];
  RatMat x = solve_many(m, rhs);
  RatVec out(b.size());
  for (int i = 0; i < m.rows; ++i) out[i] = x.at(i, 0);
  return out;
}

RatMat rat_inverse(const IntMatrix& m) {
  RatMat id(m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i) id.at(i, i) = 1;
  return solve_many(m, id);
}

IMat imat_inverse(const IMat& m) {
  RatMat inv = rat_inverse(to_int_matrix(m));
  IMat out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const Rat& q = inv.at(i, j);
      if (!rat_is_integer(q)) throw std::invalid_argument("matrix is not unimodular");
      out.at(i, j) = q.get_num().get_si();
    }
  return out;
}

int rank_rational(RatMat w) {
  int rank = 0;
  for (int col = 0; col < w.cols && rank < w.rows; ++col) {
    int p = -1;
    for (int i = rank; i < w.rows; ++i)
      if (w.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(p, j));
    Rat inv = 1 / w.at(rank, col);
    for (int j = col; j < w.cols; ++j) w.at(rank, j) *= inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == rank || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (int j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace alcove

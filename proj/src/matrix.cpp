#include "alcove/matrix.hpp"

#include <stdexcept>

namespace alcove {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

bool is_identity(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RatMat to_rat(const IntMatrix& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

RatMat mul(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

RatVec matvec(const RatMat& m, const RatVec& v) {
  if (static_cast<size_t>(m.cols) != v.size())
    throw std::invalid_argument("matrix/vector size mismatch");
  RatVec r(static_cast<size_t>(m.rows), Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

IMat IMat::identity(int n) {
  IMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat operator*(const IMat& x, const IMat& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  IMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int64_t xik = x.at(i, k);
      if (!xik) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

std::vector<int64_t> matvec(const IMat& m, const std::vector<int64_t>& v) {
  if (static_cast<size_t>(m.n) != v.size())
    throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<int64_t> r(v.size(), 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

RatVec matvec(const IMat& m, const RatVec& v) {
  if (static_cast<size_t>(m.n) != v.size())
    throw std::invalid_argument("matrix/vector size mismatch");
  RatVec r(v.size(), Rat(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j)) r[i] += Rat(m.at(i, j)) * v[j];
  return r;
}

bool is_identity(const IMat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix to_int_matrix(const IMat& m) {
  IntMatrix r(m.n, m.n);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Int(static_cast<long>(m.a[i]));
  return r;
}

IMat to_imat(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("expected square matrix");
  IMat r(m.rows);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (!m.a[i].fits_slong_p()) throw std::overflow_error("entry exceeds int64");
    r.a[i] = m.a[i].get_si();
  }
  return r;
}

uint64_t fnv1a(const int16_t* data, size_t count) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < count; ++i) {
    uint16_t u = static_cast<uint16_t>(data[i]);
    h ^= static_cast<uint64_t>(u & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<uint64_t>(u >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace alcove

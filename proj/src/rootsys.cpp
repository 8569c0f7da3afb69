#include "alcove/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

int64_t Root::height() const {
  int64_t h = 0;
  for (int64_t c : coeffs) h += c;
  return h;
}

static RatMat imat_to_rat(const IMat& m) {
  RatMat r(m.n, m.n);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(static_cast<long>(m.a[i]));
  return r;
}

RootSystem::RootSystem(CartanType t) : type_(t), cartan_(cartan_matrix(t)) {
  const int n = rank();
  cartan_t_ = to_imat(transpose(cartan_));
  cartan_t_inv_ = rat_inverse(transpose(cartan_));

  // close the simple roots under the simple reflections, keeping the
  // nonnegative cone; coroots ride along through the same reflections
  std::map<std::vector<int64_t>, size_t> seen;
  std::vector<Root> roots;
  std::vector<IMat> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = simple_reflection(i);
  for (int i = 0; i < n; ++i) {
    Root r;
    r.coeffs.assign(n, 0);
    r.coeffs[i] = 1;
    r.coroot.assign(n, 0);
    r.coroot[i] = 1;
    r.functional.resize(n);
    for (int j = 0; j < n; ++j) r.functional[j] = cartan_.at(j, i).get_si();
    seen[r.coeffs] = roots.size();
    roots.push_back(std::move(r));
  }
  for (size_t q = 0; q < roots.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      Root cur = roots[q];  // copy: push_back below may reallocate
      int64_t pairing = cur.functional[i];  // value of this root on coroot i
      std::vector<int64_t> nc = cur.coeffs;
      nc[i] -= pairing;
      if (nc[i] < 0) continue;  // reflected into the negative cone
      if (seen.count(nc)) continue;
      Root img;
      img.coeffs = std::move(nc);
      img.coroot = matvec(refl[i], cur.coroot);
      img.functional.assign(n, 0);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          img.functional[j] += cartan_.at(j, k).get_si() * img.coeffs[k];
      seen[img.coeffs] = roots.size();
      roots.push_back(std::move(img));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int64_t ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs > b.coeffs;
  });
  positive_ = std::move(roots);

  highest_ = positive_.size() - 1;
  if (positive_.size() > 1 &&
      positive_[highest_ - 1].height() == positive_[highest_].height())
    throw std::logic_error("highest root is not unique");

  coweights_.resize(n);
  for (int i = 0; i < n; ++i) {
    RatVec w(n);
    for (int k = 0; k < n; ++k) w[k] = cartan_t_inv_.at(k, i);
    coweights_[i] = std::move(w);
  }
}

Int RootSystem::connection_index() const { return abs(det(cartan_)); }

InvariantFactors RootSystem::fundamental_group() const {
  return smith_normal_form(transpose(cartan_));
}

RatVec RootSystem::to_coweight_coords(const RatVec& x) const {
  return matvec(cartan_t_, x);
}

RatVec RootSystem::from_coweight_coords(const RatVec& c) const {
  return matvec(cartan_t_inv_, c);
}

Rat RootSystem::eval_root(const Root& r, const RatVec& x) const {
  if (x.size() != static_cast<size_t>(rank()))
    throw std::invalid_argument("point has wrong dimension");
  Rat v(0);
  for (int j = 0; j < rank(); ++j)
    if (r.functional[j]) v += Rat(static_cast<long>(r.functional[j])) * x[j];
  return v;
}

bool RootSystem::in_coroot_lattice(const RatVec& x) const { return is_integral(x); }

bool RootSystem::in_coweight_lattice(const RatVec& x) const {
  return is_integral(to_coweight_coords(x));
}

IMat RootSystem::simple_reflection(int i) const {
  const int n = rank();
  IMat s = IMat::identity(n);
  for (int j = 0; j < n; ++j) s.at(i, j) -= cartan_.at(j, i).get_si();
  return s;
}

std::vector<IMat> RootSystem::simple_reflections() const {
  std::vector<IMat> v;
  v.reserve(rank());
  for (int i = 0; i < rank(); ++i) v.push_back(simple_reflection(i));
  return v;
}

IMat RootSystem::reflection(const Root& r) const {
  const int n = rank();
  IMat s = IMat::identity(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) s.at(k, j) -= r.coroot[k] * r.functional[j];
  return s;
}

IMat RootSystem::coweight_conjugate(const IMat& m) const {
  RatMat prod = mul(mul(imat_to_rat(cartan_t_), imat_to_rat(m)), cartan_t_inv_);
  IMat out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const Rat& q = prod.at(i, j);
      if (!rat_is_integer(q))
        throw std::logic_error("operator is not integral on the coweight lattice");
      out.at(i, j) = q.get_num().get_si();
    }
  return out;
}

bool Lattice::contains(const RatVec& x) const { return is_integral(matvec(to_basis, x)); }

Lattice coroot_lattice(const RootSystem& rs) {
  const int n = rs.rank();
  Lattice l;
  l.name = "coroot";
  for (int i = 0; i < n; ++i) {
    RatVec e = zero_vec(n);
    e[i] = 1;
    l.basis.push_back(std::move(e));
  }
  l.to_basis = RatMat(n, n);
  for (int i = 0; i < n; ++i) l.to_basis.at(i, i) = 1;
  return l;
}

Lattice coweight_lattice(const RootSystem& rs) {
  Lattice l;
  l.name = "coweight";
  l.basis = rs.fundamental_coweights();
  l.to_basis = imat_to_rat(rs.cartan_t());
  return l;
}

uint64_t positive_root_count(const CartanType& t) {
  const uint64_t n = static_cast<uint64_t>(t.rank);
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  throw std::logic_error("unreachable");
}

}  // namespace alcove

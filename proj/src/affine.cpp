#include "alcove/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcove {

RatVec AffineMap::operator()(const RatVec& x) const {
  return translation + matvec(linear, x);
}

AffineMap identity_map(int n) {
  return AffineMap{zero_vec(n), IMat::identity(n), LatticeTag::coroot};
}

AffineMap translation_map(const RatVec& gamma, LatticeTag tag) {
  return AffineMap{gamma, IMat::identity(static_cast<int>(gamma.size())), tag};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  LatticeTag tag = (f.lattice == LatticeTag::coweight || g.lattice == LatticeTag::coweight)
                       ? LatticeTag::coweight
                       : LatticeTag::coroot;
  return AffineMap{f.translation + matvec(f.linear, g.translation), f.linear * g.linear,
                   tag};
}

AffineMap inverse(const AffineMap& f) {
  IMat inv = imat_inverse(f.linear);
  return AffineMap{Rat(-1) * matvec(inv, f.translation), inv, f.lattice};
}

bool translation_in_tagged_lattice(const RootSystem& rs, const AffineMap& f) {
  return f.lattice == LatticeTag::coroot ? rs.in_coroot_lattice(f.translation)
                                         : rs.in_coweight_lattice(f.translation);
}

Alcove fundamental_alcove(const RootSystem& rs) {
  const int n = rs.rank();
  Alcove a;
  a.vertices.push_back(zero_vec(n));
  const std::vector<int64_t>& marks = rs.marks();
  for (int i = 0; i < n; ++i) {
    Rat inv_mark = rat(1, static_cast<long>(marks[i]));
    a.vertices.push_back(inv_mark * rs.fundamental_coweights()[i]);
  }
  RatVec sum = zero_vec(n);
  for (const RatVec& v : a.vertices) sum = sum + v;
  a.barycenter = rat(1, n + 1) * sum;
  return a;
}

bool in_closed_alcove(const RootSystem& rs, const RatVec& x) {
  RatVec c = rs.to_coweight_coords(x);
  for (const Rat& q : c)
    if (q < 0) return false;
  return rs.eval_root(rs.highest_root(), x) <= 1;
}

bool in_open_alcove(const RootSystem& rs, const RatVec& x) {
  RatVec c = rs.to_coweight_coords(x);
  for (const Rat& q : c)
    if (q <= 0) return false;
  return rs.eval_root(rs.highest_root(), x) < 1;
}

RatVec retract(const Alcove& a, const RatVec& x, const Rat& s) {
  if (s < 0 || s > 1) throw std::invalid_argument("retraction parameter outside [0,1]");
  return s * a.barycenter + (Rat(1) - s) * x;
}

ReduceResult reduce_to_alcove(const RootSystem& rs, const RatVec& x) {
  const int n = rs.rank();
  if (x.size() != static_cast<size_t>(n))
    throw std::invalid_argument("point has wrong dimension");
  const Alcove alc = fundamental_alcove(rs);
  const Root& theta = rs.highest_root();
  const IMat s_theta = rs.reflection(theta);
  RatVec theta_covec(n);
  for (int k = 0; k < n; ++k) theta_covec[k] = Rat(static_cast<long>(theta.coroot[k]));

  ReduceResult res{x, identity_map(n), 0};
  RatVec dir = alc.barycenter;  // companion: res.point + eps*dir stays wall-free
  const uint64_t kMaxSteps = 1000000;

  while (true) {
    if (res.steps > kMaxSteps)
      throw std::runtime_error("alcove reduction exceeded the step limit");
    int wall = -1;  // 0..n-1 simple, n affine
    for (int i = 0; i < n && wall < 0; ++i) {
      Rat vy(0), vz(0);
      for (int j = 0; j < n; ++j) {
        long cji = rs.cartan().at(j, i).get_si();
        if (!cji) continue;
        vy += Rat(cji) * res.point[j];
        vz += Rat(cji) * dir[j];
      }
      if (vy < 0 || (vy == 0 && vz < 0)) wall = i;
    }
    if (wall < 0) {
      Rat ty = rs.eval_root(theta, res.point) - 1;
      Rat tz = rs.eval_root(theta, dir);
      if (ty > 0 || (ty == 0 && tz > 0)) wall = n;
    }
    if (wall < 0) break;

    AffineMap step;
    if (wall < n) {
      step = AffineMap{zero_vec(n), rs.simple_reflection(wall), LatticeTag::coroot};
    } else {
      step = AffineMap{theta_covec, s_theta, LatticeTag::coroot};
    }
    res.point = step(res.point);
    dir = matvec(step.linear, dir);
    res.map = compose(step, res.map);
    ++res.steps;
  }
  return res;
}

AlcoveStabilizer alcove_stabilizer(const RootSystem& rs) {
  const int n = rs.rank();
  const Alcove alc = fundamental_alcove(rs);

  // coset representatives for coweights modulo coroots, read off from the
  // diagonalization of the coroot-to-coweight basis change
  SmithDecomposition sd = smith_decompose(transpose(rs.cartan()));
  RatMat u_inv = rat_inverse(sd.U);
  std::vector<RatVec> gammas;
  std::vector<long> dims;
  for (int i = 0; i < n; ++i) dims.push_back(sd.D.at(i, i).get_si());
  std::vector<long> tuple(n, 0);
  while (true) {
    RatVec k(n);
    for (int i = 0; i < n; ++i) k[i] = Rat(tuple[i]);
    RatVec c = matvec(u_inv, k);
    if (!is_integral(c)) throw std::logic_error("coset representative left the lattice");
    gammas.push_back(rs.from_coweight_coords(c));
    int pos = n - 1;
    while (pos >= 0) {
      if (++tuple[pos] < dims[pos]) break;
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  AlcoveStabilizer st;
  for (const RatVec& gamma : gammas) {
    ReduceResult red = reduce_to_alcove(rs, alc.barycenter + gamma);
    if (!(red.point == alc.barycenter))
      throw std::logic_error("coweight translate did not return to the barycenter");
    AffineMap h = compose(red.map, translation_map(gamma, LatticeTag::coweight));
    if (!(h(alc.barycenter) == alc.barycenter))
      throw std::logic_error("stabilizer element moves the barycenter");
    st.elements.push_back(std::move(h));
  }
  for (size_t i = 0; i < st.elements.size(); ++i)
    for (size_t j = i + 1; j < st.elements.size(); ++j)
      if (st.elements[i].same_map(st.elements[j]))
        throw std::logic_error("duplicate stabilizer element");
  if (!st.elements[0].same_map(identity_map(n)))
    throw std::logic_error("first stabilizer element is not the identity");

  // action on the vertices must be a permutation
  for (const AffineMap& h : st.elements) {
    std::vector<int> perm(alc.vertices.size(), -1);
    std::vector<char> hit(alc.vertices.size(), 0);
    for (size_t v = 0; v < alc.vertices.size(); ++v) {
      RatVec img = h(alc.vertices[v]);
      for (size_t w = 0; w < alc.vertices.size(); ++w)
        if (img == alc.vertices[w]) {
          perm[v] = static_cast<int>(w);
          hit[w] = 1;
          break;
        }
      if (perm[v] < 0) throw std::logic_error("stabilizer element does not preserve the alcove");
    }
    for (char c : hit)
      if (!c) throw std::logic_error("vertex action is not a permutation");
    st.vertex_perm.push_back(std::move(perm));
  }

  // closure and structure
  const size_t m = st.elements.size();
  st.table.assign(m, std::vector<uint32_t>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      AffineMap p = compose(st.elements[i], st.elements[j]);
      // products stabilize the alcove, so they differ from a representative
      // by a coroot translation exactly when they are equal to it
      int64_t found = -1;
      for (size_t k = 0; k < m; ++k)
        if (p.same_map(st.elements[k])) {
          found = static_cast<int64_t>(k);
          break;
        }
      if (found < 0) throw std::logic_error("stabilizer is not closed under composition");
      st.table[i][j] = static_cast<uint32_t>(found);
    }
  st.structure = abelian_structure(st.table);
  return st;
}

}  // namespace alcove

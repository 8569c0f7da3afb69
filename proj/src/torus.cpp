#include "alcove/torus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

TorusPoint::TorusPoint(const RootSystem& rs, const RatVec& coroot_coords) {
  RatVec c = rs.to_coweight_coords(coroot_coords);
  for (Rat& q : c) q = rat_frac(q);
  cw_ = std::move(c);
  coords_ = rs.from_coweight_coords(cw_);
}

TorusPoint special_point(const RootSystem& rs) {
  return TorusPoint(rs, fundamental_alcove(rs).barycenter);
}

TorusPoint act(const RootSystem& rs, const IMat& w, const TorusPoint& t) {
  return TorusPoint(rs, matvec(w, t.coords()));
}

namespace {

constexpr size_t kAnalyzeLimit = 4096;

std::vector<int> path_to_root(const std::vector<int32_t>& parent,
                              const std::vector<int8_t>& via, size_t p) {
  std::vector<int> js;
  while (parent[p] >= 0) {
    js.push_back(via[p]);
    p = static_cast<size_t>(parent[p]);
  }
  return js;
}

IMat word_matrix(const std::vector<IMat>& refl, const std::vector<int>& js) {
  IMat m = IMat::identity(refl.empty() ? 0 : refl[0].n);
  for (auto it = js.rbegin(); it != js.rend(); ++it) m = refl[*it] * m;
  return m;
}

uint64_t class_count_of(const std::vector<IMat>& els) {
  std::map<std::vector<int64_t>, size_t> index;
  for (size_t i = 0; i < els.size(); ++i) index[els[i].a] = i;
  std::vector<IMat> inverses;
  inverses.reserve(els.size());
  for (const IMat& g : els) inverses.push_back(imat_inverse(g));
  std::vector<char> seen(els.size(), 0);
  uint64_t classes = 0;
  for (size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (size_t g = 0; g < els.size(); ++g) {
      IMat c = els[g] * els[i] * inverses[g];
      auto it = index.find(c.a);
      if (it == index.end()) throw std::logic_error("conjugate escaped the subgroup");
      seen[it->second] = 1;
    }
  }
  return classes;
}

StabilizerReport finish_report(std::vector<IMat> els, std::string method,
                               uint64_t orbit_size) {
  std::sort(els.begin(), els.end(),
            [](const IMat& a, const IMat& b) { return a.a < b.a; });
  StabilizerReport rep;
  rep.order = els.size();
  rep.method = std::move(method);
  rep.orbit_size = orbit_size;
  if (els.size() <= kAnalyzeLimit) {
    rep.class_count = class_count_of(els);
    rep.abelian = rep.class_count == rep.order;
    if (rep.abelian) rep.structure = abelian_structure(cayley_table_for(els));
  } else {
    rep.abelian = false;
    rep.class_count = 0;  // not computed at this size
  }
  rep.elements = std::move(els);
  return rep;
}

}  // namespace

OrbitStabilizer orbit_stabilizer(const RootSystem& rs, const TorusPoint& t,
                                 uint64_t cap) {
  Int worder = weyl_order(rs.type());
  if (worder > cap) throw CapExceeded(worder, cap);
  const uint64_t wo = worder.get_ui();
  const int n = rs.rank();

  Int den = common_denominator(t.cw_coords());
  if (!den.fits_sint_p() || den.get_si() > 32767)
    throw std::overflow_error("orbit coordinates need denominator below 2^15");
  const int64_t d = den.get_si();
  std::vector<int16_t> start(n);
  for (int i = 0; i < n; ++i) {
    Rat scaled = t.cw_coords()[i] * Rat(den);
    start[i] = static_cast<int16_t>(scaled.get_num().get_si());
  }

  std::vector<IMat> cw_gens;
  std::vector<IMat> refl = rs.simple_reflections();
  for (int i = 0; i < n; ++i) cw_gens.push_back(rs.coweight_conjugate(refl[i]));

  // BFS over scaled coweight coordinates mod d
  const size_t cell = static_cast<size_t>(n);
  std::vector<int16_t> flat;
  std::vector<int32_t> parent;
  std::vector<int8_t> via;
  uint64_t table_size = 16;
  while (table_size < 4 * (wo + 1)) table_size <<= 1;
  std::vector<int32_t> slots(table_size, -1);
  const uint64_t mask = table_size - 1;

  auto lookup = [&](const int16_t* key) -> int64_t {
    uint64_t pos = fnv1a(key, cell) & mask;
    while (true) {
      int32_t idx = slots[pos];
      if (idx < 0) return -1;
      if (std::equal(key, key + cell, flat.data() + idx * cell)) return idx;
      pos = (pos + 1) & mask;
    }
  };
  auto insert = [&](const int16_t* key, int32_t par, int8_t gen) {
    int32_t idx = static_cast<int32_t>(parent.size());
    flat.insert(flat.end(), key, key + cell);
    uint64_t pos = fnv1a(key, cell) & mask;
    while (slots[pos] >= 0) pos = (pos + 1) & mask;
    slots[pos] = idx;
    parent.push_back(par);
    via.push_back(gen);
  };

  insert(start.data(), -1, -1);
  std::vector<int16_t> key(cell);
  std::vector<int64_t> cur(n), next(n);
  for (size_t q = 0; q < parent.size(); ++q) {
    for (int i = 0; i < n; ++i) cur[i] = flat[q * cell + i];
    for (int g = 0; g < n; ++g) {
      next = matvec(cw_gens[g], cur);
      for (int i = 0; i < n; ++i) {
        int64_t r = next[i] % d;
        if (r < 0) r += d;
        key[i] = static_cast<int16_t>(r);
      }
      if (lookup(key.data()) >= 0) continue;
      if (parent.size() >= wo) throw std::logic_error("orbit passed the group order");
      insert(key.data(), static_cast<int32_t>(q), static_cast<int8_t>(g));
    }
  }
  const uint64_t orbit = parent.size();
  if (wo % orbit != 0) throw std::logic_error("orbit size does not divide the group order");
  const uint64_t target = wo / orbit;

  OrbitStabilizer out;
  out.orbit_size = orbit;
  out.stabilizer = {IMat::identity(n)};
  if (target == 1) return out;

  // walk the non-tree edges; their Schreier elements generate the stabilizer
  std::vector<IMat> sgens;
  std::vector<int64_t> img(n);
  for (size_t q = 0; q < orbit && out.stabilizer.size() < target; ++q) {
    for (int i = 0; i < n; ++i) cur[i] = flat[q * cell + i];
    IMat u_q = word_matrix(refl, path_to_root(parent, via, q));
    for (int g = 0; g < n && out.stabilizer.size() < target; ++g) {
      img = matvec(cw_gens[g], cur);
      for (int i = 0; i < n; ++i) {
        int64_t r = img[i] % d;
        if (r < 0) r += d;
        key[i] = static_cast<int16_t>(r);
      }
      int64_t to = lookup(key.data());
      if (to < 0) throw std::logic_error("orbit image missing from the table");
      if (static_cast<size_t>(parent[to]) == q && via[to] == g && to != 0) continue;
      // inverse of the target transversal, then the edge, then the source;
      // the words are involutions, so reversing inverts
      std::vector<int> jq = path_to_root(parent, via, static_cast<size_t>(to));
      std::reverse(jq.begin(), jq.end());
      IMat elem = word_matrix(refl, jq) * refl[g] * u_q;
      if (is_identity(elem)) continue;
      if (std::find(sgens.begin(), sgens.end(), elem) != sgens.end()) continue;
      if (!(act(rs, elem, t) == t))
        throw std::logic_error("Schreier element does not stabilize the point");
      sgens.push_back(elem);
      out.stabilizer = close_group(sgens, target);
    }
  }
  if (out.stabilizer.size() != target)
    throw std::logic_error("stabilizer closure missed the forced order");
  return out;
}

StabilizerReport stabilizer_direct(const RootSystem& rs, const TorusPoint& t,
                                   uint64_t cap) {
  OrbitStabilizer os = orbit_stabilizer(rs, t, cap);
  return finish_report(std::move(os.stabilizer), "orbit-bfs", os.orbit_size);
}

StabilizerReport stabilizer_alcove(const RootSystem& rs, const TorusPoint& t,
                                   uint64_t cap) {
  const int n = rs.rank();
  ReduceResult red = reduce_to_alcove(rs, t.coords());
  const RatVec& y = red.point;

  std::vector<IMat> gens{IMat::identity(n)};
  RatVec c = rs.to_coweight_coords(y);
  for (int i = 0; i < n; ++i)
    if (c[i] == 0) gens.push_back(rs.simple_reflection(i));
  if (rs.eval_root(rs.highest_root(), y) == 1)
    gens.push_back(rs.reflection(rs.highest_root()));
  AlcoveStabilizer ha = alcove_stabilizer(rs);
  for (const AffineMap& h : ha.elements)
    if (h(y) == y) gens.push_back(h.linear);

  std::vector<IMat> stab_at_y = close_group(gens, cap);
  IMat u = red.map.linear;
  IMat u_inv = imat_inverse(u);
  std::vector<IMat> els;
  els.reserve(stab_at_y.size());
  for (const IMat& w : stab_at_y) els.push_back(u_inv * w * u);
  for (const IMat& w : els)
    if (!(act(rs, w, t) == t))
      throw std::logic_error("alcove stabilizer element does not fix the point");
  return finish_report(std::move(els), "alcove", 0);
}

BarycenterCheck verify_barycenter_stabilizer(const RootSystem& rs, uint64_t cap) {
  BarycenterCheck out;
  const Alcove alc = fundamental_alcove(rs);
  const RatVec& x0 = alc.barycenter;
  AlcoveStabilizer ha = alcove_stabilizer(rs);
  TorusPoint t0 = special_point(rs);

  StabilizerReport stab;
  if (weyl_order(rs.type()) > cap) {
    stab = stabilizer_alcove(rs, t0, cap);
  } else {
    stab = stabilizer_direct(rs, t0, cap);
  }
  out.order = stab.order;
  out.method = stab.method;

  if (stab.order != ha.elements.size())
    out.failures.push_back("stabilizer and alcove group have different orders");

  // w -> (x0 - w x0, w) must land in the alcove group, bijectively
  std::vector<AffineMap> images;
  for (const IMat& w : stab.elements) {
    RatVec gamma = x0 - matvec(w, x0);
    AffineMap h{gamma, w, LatticeTag::coweight};
    if (!rs.in_coweight_lattice(gamma))
      out.failures.push_back("translation part is not a coweight");
    bool found = false;
    for (const AffineMap& e : ha.elements)
      if (e.same_map(h)) {
        found = true;
        break;
      }
    if (!found) out.failures.push_back("image is not an alcove symmetry");
    images.push_back(std::move(h));
  }
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i].same_map(images[j]))
        out.failures.push_back("map is not injective");
  if (images.size() != ha.elements.size())
    out.failures.push_back("map is not surjective");

  // homomorphism: compose images and compare against the image of the product
  for (size_t i = 0; i < stab.elements.size(); ++i)
    for (size_t j = 0; j < stab.elements.size(); ++j) {
      IMat prod = stab.elements[i] * stab.elements[j];
      RatVec gamma = x0 - matvec(prod, x0);
      AffineMap expect{gamma, prod, LatticeTag::coweight};
      if (!compose(images[i], images[j]).same_map(expect))
        out.failures.push_back("map is not a homomorphism");
    }

  // group shapes agree with the lattice quotient
  if (stab.structure) {
    FiniteAbelianGroup quotient = from_invariant_factors(rs.fundamental_group());
    if (!(*stab.structure == quotient))
      out.failures.push_back("stabilizer shape differs from the lattice quotient");
    if (!(ha.structure == quotient))
      out.failures.push_back("alcove group shape differs from the lattice quotient");
  } else {
    out.failures.push_back("stabilizer is not abelian");
  }

  out.ok = out.failures.empty();
  return out;
}

}  // namespace alcove

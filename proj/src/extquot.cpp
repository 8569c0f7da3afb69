#include "alcove/extquot.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

ExtQuotFiber fiber(const RootSystem& rs, const TorusPoint& t, uint64_t cap) {
  StabilizerReport rep = stabilizer_alcove(rs, t, cap);
  if (rep.class_count == 0)
    throw CapExceeded(Int(static_cast<long>(rep.order)), cap);
  return ExtQuotFiber{t, rep.order, rep.class_count, rep.abelian, rep.method};
}

std::vector<ExtQuotComponent> components(const RootSystem& rs, uint64_t cap) {
  const int n = rs.rank();
  WeylGroup w = generate(rs, cap);
  std::vector<std::vector<uint32_t>> classes = conjugacy_classes(w);
  const uint64_t order = w.size();

  std::vector<ExtQuotComponent> out;
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    const std::vector<uint32_t>& cls = classes[ci];
    IMat rep = w.element(cls[0]);
    IMat cw = rs.coweight_conjugate(rep);

    IntMatrix one_minus(n, n);
    RatMat minus_one(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long e = static_cast<long>(cw.at(i, j));
        one_minus.at(i, j) = (i == j ? 1 : 0) - e;
        minus_one.at(i, j) = Rat(e - (i == j ? 1 : 0));
      }
    InvariantFactors inv = smith_normal_form(one_minus);
    int dim = n - rank_rational(minus_one);
    if (inv.free_rank != dim)
      throw std::logic_error("fixed dimension disagrees between routes");

    ExtQuotComponent qc;
    qc.class_index = ci;
    qc.class_rep = rep;
    qc.rep_word = w.word(cls[0]);
    qc.class_size = cls.size();
    qc.centralizer_order = order / cls.size();
    if (order % cls.size() != 0)
      throw std::logic_error("class size does not divide the group order");
    qc.fixed_dim = dim;
    qc.fixed_pi0 = inv.torsion_order();
    out.push_back(std::move(qc));
  }
  return out;
}

uint64_t extquot_point_count_over_orbit(const RootSystem& rs, const TorusPoint& t,
                                        uint64_t cap) {
  WeylGroup w = generate(rs, cap);

  // the orbit, as canonical points
  std::vector<TorusPoint> orbit{t};
  std::map<RatVec, size_t> point_index{{t.cw_coords(), 0}};
  for (size_t q = 0; q < orbit.size(); ++q) {
    for (const IMat& g : w.generators()) {
      TorusPoint img = act(rs, g, orbit[q]);
      if (point_index.count(img.cw_coords())) continue;
      if (orbit.size() >= cap)
        throw CapExceeded(Int(static_cast<long>(orbit.size() + 1)), cap);
      point_index[img.cw_coords()] = orbit.size();
      orbit.push_back(std::move(img));
    }
  }

  // all incidence pairs (group element, fixed point)
  std::map<std::pair<size_t, size_t>, size_t> pair_index;
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t e = 0; e < w.size(); ++e) {
    IMat m = w.element(e);
    for (size_t p = 0; p < orbit.size(); ++p) {
      if (!(act(rs, m, orbit[p]) == orbit[p])) continue;
      pair_index[{e, p}] = pairs.size();
      pairs.emplace_back(e, p);
    }
  }

  // orbits of the simultaneous action by the generators
  std::vector<char> seen(pairs.size(), 0);
  uint64_t count = 0;
  for (size_t start = 0; start < pairs.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    std::vector<size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      auto [e, p] = pairs[queue.back()];
      queue.pop_back();
      IMat m = w.element(e);
      for (size_t gi = 0; gi < w.generators().size(); ++gi) {
        const IMat& g = w.generators()[gi];
        int64_t conj = w.find(g * m * g);  // generators are involutions
        if (conj < 0) throw std::logic_error("conjugate escaped the group");
        TorusPoint img = act(rs, g, orbit[p]);
        size_t pi = point_index.at(img.cw_coords());
        size_t pid = pair_index.at({static_cast<size_t>(conj), pi});
        if (!seen[pid]) {
          seen[pid] = 1;
          queue.push_back(pid);
        }
      }
    }
  }
  return count;
}

uint64_t fixed_points_on_grid(const RootSystem& rs, const IMat& w, long grid) {
  const int n = rs.rank();
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  double size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<double>(grid);
  if (size > 2e7) throw std::invalid_argument("grid enumeration too large");

  IMat cw = rs.coweight_conjugate(w);
  std::vector<int64_t> c(n, 0);
  uint64_t count = 0;
  while (true) {
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i) {
      int64_t acc = 0;
      for (int j = 0; j < n; ++j) acc += cw.at(i, j) * c[j];
      fixed = (acc - c[i]) % grid == 0;
    }
    if (fixed) ++count;
    int pos = n - 1;
    while (pos >= 0) {
      if (++c[pos] < grid) break;
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

Int predicted_fixed_points(const RootSystem& rs, const IMat& w, long grid) {
  const int n = rs.rank();
  IMat cw = rs.coweight_conjugate(w);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = (i == j ? 1 : 0) - static_cast<long>(cw.at(i, j));
  SmithDecomposition sd = smith_decompose(m);
  Int count = 1;
  Int g(grid);
  for (int i = 0; i < n; ++i) {
    const Int& d = sd.D.at(i, i);
    if (d == 0) {
      count *= g;
    } else {
      Int gc;
      mpz_gcd(gc.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
      count *= gc;
    }
  }
  return count;
}

}  // namespace alcove

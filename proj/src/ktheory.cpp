#include "alcove/ktheory.hpp"

#include <map>
#include <stdexcept>

namespace alcove {

static std::vector<std::vector<long>> tuples(const std::vector<long>& dims) {
  std::vector<std::vector<long>> out;
  std::vector<long> t(dims.size(), 0);
  while (true) {
    out.push_back(t);
    int pos = static_cast<int>(dims.size()) - 1;
    while (pos >= 0) {
      if (++t[pos] < dims[pos]) break;
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<Character> character_table(const FiniteAbelianGroup& g) {
  std::vector<long> dims;
  for (const Int& d : g.factors) dims.push_back(d.get_si());
  std::vector<std::vector<long>> els = tuples(dims);
  std::vector<Character> table;
  table.reserve(els.size());
  for (const std::vector<long>& m : els) {
    Character chi;
    chi.exponents.reserve(els.size());
    for (const std::vector<long>& t : els) {
      Rat e(0);
      for (size_t i = 0; i < dims.size(); ++i) e += rat(m[i] * t[i], dims[i]);
      chi.exponents.push_back(rat_frac(e));
    }
    table.push_back(std::move(chi));
  }
  return table;
}

bool characters_orthogonal(const FiniteAbelianGroup& g,
                           const std::vector<Character>& table) {
  const size_t n = table.size();
  if (Int(static_cast<long>(n)) != g.order()) return false;
  for (const Character& chi : table)
    if (chi.exponents.size() != n) return false;

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      // quotient character chi_a * conj(chi_b)
      std::map<Rat, size_t> counts;
      Int m(1);
      for (size_t k = 0; k < n; ++k) {
        Rat e = rat_frac(table[a].exponents[k] - table[b].exponents[k]);
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), e.get_den_mpz_t());
        ++counts[e];
      }
      if (a == b) {
        // all exponents zero: the value sum is the group order
        if (counts.size() != 1 || counts.begin()->first != 0) return false;
        continue;
      }
      // distinct rows: each m-th division value appears n/m times, so the
      // roots of unity cancel exactly
      if (m == 1) return false;  // quotient would be trivial
      long mv = m.get_si();
      if (n % static_cast<size_t>(mv) != 0) return false;
      if (counts.size() != static_cast<size_t>(mv)) return false;
      for (long k = 0; k < mv; ++k) {
        auto it = counts.find(rat(k, mv));
        if (it == counts.end() || it->second != n / static_cast<size_t>(mv))
          return false;
      }
    }
  return true;
}

uint64_t l_packet_size(const RootSystem& rs, uint64_t cap) {
  StabilizerReport rep = stabilizer_alcove(rs, special_point(rs), cap);
  if (!rep.abelian)
    throw std::logic_error("special-point stabilizer is not abelian");
  return rep.order;
}

uint64_t generator_count(const RootSystem& rs) {
  uint64_t count = 1;  // the origin
  for (int64_t mark : rs.marks())
    if (mark == 1) ++count;
  return count;
}

KReport k_groups_spherical(const RootSystem& rs, uint64_t cap) {
  KReport rep;
  rep.type = rs.type();
  rep.connection_index = rs.connection_index();
  rep.lattice_quotient_order = rs.fundamental_group().torsion_order();

  AlcoveStabilizer ha = alcove_stabilizer(rs);
  rep.k0_rank = character_table(ha.structure).size();
  rep.k1_rank = 0;
  rep.k1_method = "cited-theorem";
  rep.l_packet_size = l_packet_size(rs, cap);
  rep.generator_count = generator_count(rs);
  rep.point_k_theory = ha.elements.size() == 1;
  return rep;
}

}  // namespace alcove

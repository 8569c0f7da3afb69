#include "alcove/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

Int FiniteAbelianGroup::order() const {
  Int p = 1;
  for (const Int& d : factors) p *= d;
  return p;
}

std::string FiniteAbelianGroup::name() const {
  if (factors.empty()) return "trivial";
  std::string s;
  for (const Int& d : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.get_str();
  }
  return s;
}

FiniteAbelianGroup from_invariant_factors(const InvariantFactors& f) {
  if (f.free_rank != 0) throw std::invalid_argument("cokernel is infinite");
  return FiniteAbelianGroup{f.factors};
}

uint32_t table_identity(const CayleyTable& t) {
  const uint32_t n = static_cast<uint32_t>(t.size());
  for (uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (uint32_t j = 0; j < n && ok; ++j) ok = t[e][j] == j && t[j][e] == j;
    if (ok) return e;
  }
  throw std::invalid_argument("table has no identity");
}

bool table_is_abelian(const CayleyTable& t) {
  const uint32_t n = static_cast<uint32_t>(t.size());
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (t[i][j] != t[j][i]) return false;
  return true;
}

uint64_t element_order(const CayleyTable& t, uint32_t x) {
  const uint32_t e = table_identity(t);
  uint64_t k = 1;
  uint32_t p = x;
  while (p != e) {
    p = t[p][x];
    ++k;
    if (k > t.size()) throw std::invalid_argument("table is not a group");
  }
  return k;
}

FiniteAbelianGroup abelian_structure(const CayleyTable& t) {
  if (!table_is_abelian(t)) throw std::invalid_argument("group is not abelian");
  const uint32_t n = static_cast<uint32_t>(t.size());
  if (n <= 1) return {};

  const uint32_t e = table_identity(t);
  uint64_t exponent = 1;
  uint32_t g = e;
  for (uint32_t x = 0; x < n; ++x) {
    uint64_t k = element_order(t, x);
    if (k > exponent) {
      exponent = k;
      g = x;
    }
  }
  if (exponent == n) return FiniteAbelianGroup{{Int(static_cast<long>(n))}};

  // quotient by <g>
  std::vector<uint32_t> cyc;
  for (uint32_t p = e;;) {
    cyc.push_back(p);
    p = t[p][g];
    if (p == e) break;
  }
  std::vector<uint32_t> coset_rep(n);
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t rep = x;
    for (uint32_t s : cyc) rep = std::min(rep, t[x][s]);
    coset_rep[x] = rep;
  }
  std::map<uint32_t, uint32_t> label;
  for (uint32_t x = 0; x < n; ++x)
    if (coset_rep[x] == x) {
      uint32_t id = static_cast<uint32_t>(label.size());
      label[x] = id;
    }
  CayleyTable q(label.size(), std::vector<uint32_t>(label.size()));
  for (auto [ra, la] : label)
    for (auto [rb, lb] : label) q[la][lb] = label.at(coset_rep[t[ra][rb]]);

  FiniteAbelianGroup out = abelian_structure(q);
  out.factors.push_back(Int(static_cast<long>(exponent)));
  return out;
}

uint64_t table_class_count(const CayleyTable& t) {
  const uint32_t n = static_cast<uint32_t>(t.size());
  // inverses
  const uint32_t e = table_identity(t);
  std::vector<uint32_t> inv(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (t[i][j] == e) inv[i] = j;
  std::vector<char> seen(n, 0);
  uint64_t classes = 0;
  for (uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++classes;
    for (uint32_t a = 0; a < n; ++a) seen[t[t[a][i]][inv[a]]] = 1;
  }
  return classes;
}

}  // namespace alcove

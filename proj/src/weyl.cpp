#include "alcove/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

Int weyl_order(const CartanType& t) {
  const int n = t.rank;
  Int f;
  switch (t.series) {
    case Series::A:
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n + 1));
      return f;
    case Series::B:
    case Series::C:
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(n));
      return f;
    case Series::D:
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(n - 1));
      return f;
    case Series::E:
      return n == 6 ? Int(51840) : (n == 7 ? Int(2903040) : Int(696729600));
    case Series::F:
      return Int(1152);
    case Series::G:
      return Int(12);
  }
  throw std::logic_error("unreachable");
}

static void pack(const IMat& m, int16_t* out) {
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i] < INT16_MIN || m.a[i] > INT16_MAX)
      throw std::overflow_error("matrix entry exceeds int16");
    out[i] = static_cast<int16_t>(m.a[i]);
  }
}

IMat WeylGroup::element(size_t idx) const {
  IMat m(n_);
  const size_t cell = static_cast<size_t>(n_) * n_;
  const int16_t* p = flat_.data() + idx * cell;
  for (size_t i = 0; i < cell; ++i) m.a[i] = p[i];
  return m;
}

void WeylGroup::insert_slot(uint64_t h, int32_t idx) {
  uint64_t pos = h & mask_;
  while (slots_[pos] >= 0) pos = (pos + 1) & mask_;
  slots_[pos] = idx;
}

int64_t WeylGroup::lookup(const int16_t* key) const {
  const size_t cell = static_cast<size_t>(n_) * n_;
  uint64_t pos = fnv1a(key, cell) & mask_;
  while (true) {
    int32_t idx = slots_[pos];
    if (idx < 0) return -1;
    if (std::equal(key, key + cell, flat_.data() + idx * cell)) return idx;
    pos = (pos + 1) & mask_;
  }
}

int64_t WeylGroup::find(const IMat& m) const {
  std::vector<int16_t> key(m.a.size());
  pack(m, key.data());
  return lookup(key.data());
}

std::vector<int> WeylGroup::word(size_t idx) const {
  std::vector<int> w;
  while (idx != 0) {
    w.push_back(via_[idx]);
    idx = static_cast<size_t>(parent_[idx]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

WeylGroup generate(const RootSystem& rs, uint64_t cap) {
  Int expected = weyl_order(rs.type());
  if (expected > cap) throw CapExceeded(expected, cap);
  const uint64_t order = expected.get_ui();

  WeylGroup w;
  w.n_ = rs.rank();
  w.count_ = 0;
  w.gens_ = rs.simple_reflections();
  const size_t cell = static_cast<size_t>(w.n_) * w.n_;
  w.flat_.reserve(order * cell);
  w.parent_.reserve(order);
  w.via_.reserve(order);
  uint64_t table_size = 16;
  while (table_size < 2 * order) table_size <<= 1;
  w.slots_.assign(table_size, -1);
  w.mask_ = table_size - 1;

  auto push = [&](const IMat& m, int32_t parent, int8_t via) {
    size_t base = w.flat_.size();
    w.flat_.resize(base + cell);
    pack(m, w.flat_.data() + base);
    w.insert_slot(fnv1a(w.flat_.data() + base, cell), static_cast<int32_t>(w.count_));
    w.parent_.push_back(parent);
    w.via_.push_back(via);
    ++w.count_;
  };

  push(IMat::identity(w.n_), -1, -1);
  std::vector<int16_t> key(cell);
  for (size_t q = 0; q < w.count_; ++q) {
    IMat cur = w.element(q);
    for (int i = 0; i < w.n_; ++i) {
      IMat next = cur * w.gens_[i];
      pack(next, key.data());
      if (w.lookup(key.data()) >= 0) continue;
      if (w.count_ >= order)
        throw std::logic_error("enumeration passed the closed-form order");
      push(next, static_cast<int32_t>(q), static_cast<int8_t>(i));
    }
  }
  if (w.count_ != order)
    throw std::logic_error("enumeration stopped short of the closed-form order");
  return w;
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const WeylGroup& w) {
  const size_t n = w.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<uint32_t>> classes;
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> cls{static_cast<uint32_t>(start)};
    seen[start] = 1;
    for (size_t q = 0; q < cls.size(); ++q) {
      IMat x = w.element(cls[q]);
      for (const IMat& s : w.generators()) {
        IMat y = s * x * s;  // simple reflections are involutions
        int64_t idx = w.find(y);
        if (idx < 0) throw std::logic_error("conjugate escaped the group");
        if (!seen[idx]) {
          seen[idx] = 1;
          cls.push_back(static_cast<uint32_t>(idx));
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<IMat> close_group(const std::vector<IMat>& gens, uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  const int n = gens[0].n;
  std::vector<IMat> els{IMat::identity(n)};
  std::map<std::vector<int64_t>, size_t> index{{els[0].a, 0}};
  for (size_t q = 0; q < els.size(); ++q) {
    for (const IMat& g : gens) {
      IMat next = els[q] * g;
      if (index.count(next.a)) continue;
      if (els.size() >= cap) throw CapExceeded(Int(static_cast<long>(els.size() + 1)), cap);
      index[next.a] = els.size();
      els.push_back(std::move(next));
    }
  }
  return els;
}

CayleyTable cayley_table_for(const std::vector<IMat>& els) {
  const size_t n = els.size();
  std::map<std::vector<int64_t>, size_t> index;
  for (size_t i = 0; i < n; ++i) index[els[i].a] = i;
  CayleyTable t(n, std::vector<uint32_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IMat p = els[i] * els[j];
      auto it = index.find(p.a);
      if (it == index.end()) throw std::logic_error("set is not closed under products");
      t[i][j] = static_cast<uint32_t>(it->second);
    }
  return t;
}

GroupAnalysis analyze_group(const CayleyTable& t) {
  GroupAnalysis a;
  a.order = t.size();
  a.abelian = table_is_abelian(t);
  if (a.abelian) {
    a.structure = abelian_structure(t);
    a.class_count = a.order;
  } else {
    a.class_count = table_class_count(t);
  }
  return a;
}

GroupAnalysis analyze_elements(const std::vector<IMat>& els) {
  return analyze_group(cayley_table_for(els));
}

}  // namespace alcove

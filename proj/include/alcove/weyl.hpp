#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/abelian.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

struct CapExceeded : std::runtime_error {
  Int needed;
  uint64_t cap;

  CapExceeded(Int needed_, uint64_t cap_)
      : std::runtime_error("group order " + needed_.get_str() + " exceeds cap " +
                           std::to_string(cap_)),
        needed(std::move(needed_)),
        cap(cap_) {}
};

// Order of the finite reflection group, by the closed-form product per series.
Int weyl_order(const CartanType& t);

// The finite reflection group, fully enumerated. Elements are matrices acting
// on simple-coroot coordinates, stored flat as int16 (entries stay tiny in
// this basis). Element 0 is the identity; BFS order is deterministic.
class WeylGroup {
 public:
  int rank() const { return n_; }
  size_t size() const { return count_; }
  const std::vector<IMat>& generators() const { return gens_; }
  IMat element(size_t idx) const;
  // -1 when absent
  int64_t find(const IMat& m) const;
  // BFS word over generator indices; empty for the identity
  std::vector<int> word(size_t idx) const;

 private:
  friend WeylGroup generate(const RootSystem& rs, uint64_t cap);
  void insert_slot(uint64_t h, int32_t idx);
  int64_t lookup(const int16_t* key) const;

  int n_ = 0;
  size_t count_ = 0;
  std::vector<IMat> gens_;
  std::vector<int16_t> flat_;
  std::vector<int32_t> parent_;
  std::vector<int8_t> via_;
  std::vector<int32_t> slots_;
  uint64_t mask_ = 0;
};

// Enumerates the group; throws CapExceeded when its order would pass cap.
WeylGroup generate(const RootSystem& rs, uint64_t cap = 1000000);

// Conjugacy classes as sorted index lists, ordered by smallest member.
std::vector<std::vector<uint32_t>> conjugacy_classes(const WeylGroup& w);

// Closure of a generating set inside some ambient finite group of matrices.
// The identity is always element 0 of the result.
std::vector<IMat> close_group(const std::vector<IMat>& gens, uint64_t cap);

CayleyTable cayley_table_for(const std::vector<IMat>& els);

struct GroupAnalysis {
  uint64_t order = 1;
  bool abelian = true;
  FiniteAbelianGroup structure;  // meaningful only when abelian
  uint64_t class_count = 1;
};

GroupAnalysis analyze_group(const CayleyTable& t);
GroupAnalysis analyze_elements(const std::vector<IMat>& els);

}  // namespace alcove

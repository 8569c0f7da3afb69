#pragma once

#include "alcove/ktheory.hpp"
#include "alcove/sampling.hpp"

namespace alcove {

struct CheckResult {
  std::string name;
  std::string type;
  std::string status;  // "pass" | "fail" | "skipped (cap)" | "skipped (size)"
  std::string method;  // tag for how the value was produced, may be empty
  std::string detail;  // witness on failure, short summary otherwise
};

struct VerifyOptions {
  uint64_t cap = 1000000;
  uint64_t seed = 0;
  int samples = 20;          // random stabilizer points per type
  int property_samples = 100;  // retraction / reduction property draws
  int max_rank = 8;
};

// Expected table values, by series.
Int expected_connection_index(const CartanType& t);
std::vector<Int> expected_lattice_factors(const CartanType& t);

// Stable per-check seed derivation, so results do not depend on the order in
// which types or checks run.
uint64_t seed_for(uint64_t seed, const CartanType& t, const std::string& check);

// The rank-bounded standard scope: A1.., B2.., C2.., D3.., E6..E8, F4, G2.
std::vector<CartanType> default_scope(int max_rank);

std::vector<CheckResult> verify_type(const CartanType& t, const VerifyOptions& opt);
std::vector<CheckResult> verify_scope(const std::vector<CartanType>& types,
                                      const VerifyOptions& opt);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace alcove

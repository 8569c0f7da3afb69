#include "alcove/rational.hpp"

#include <stdexcept>

namespace alcove {

static void check_same_size(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  check_same_size(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  check_same_size(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

RatVec rat_vec(std::initializer_list<long> nums, long den) {
  RatVec r;
  r.reserve(nums.size());
  for (long p : nums) r.push_back(rat(p, den));
  return r;
}

RatVec zero_vec(int n) { return RatVec(static_cast<size_t>(n), Rat(0)); }

bool is_zero(const RatVec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

bool is_integral(const RatVec& v) {
  for (const Rat& q : v)
    if (!rat_is_integer(q)) return false;
  return true;
}

Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const Rat& q : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace alcove

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace alcove {

// Exact arithmetic only. Every coordinate in the library is an mpq_class
// rational; floating point is never used.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" for proper fractions, plain "p" for integers.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& v);
RatVec rat_vec(std::initializer_list<long> nums, long den = 1);
RatVec zero_vec(int n);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);
Int common_denominator(const RatVec& v);
std::string vec_str(const RatVec& v);

}  // namespace alcove

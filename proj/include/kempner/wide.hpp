#ifndef KEMPNER_WIDE_HPP
#define KEMPNER_WIDE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kempner {

// All accumulators in this project are exact integers.  The common fields fit
// comfortably in 128 bits (sums are bounded by x^2, and x_max is capped at
// 1e10); higher moments use BigUint below.
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);
u128 u128_from_string(const std::string& s);
double u128_to_double(u128 v);

uint64_t isqrt64(uint64_t n);

// Largest r with r^k <= n, for k >= 1.
uint64_t ikth_root(uint64_t n, int k);

// Minimal arbitrary-precision unsigned integer: little-endian 64-bit limbs,
// normalized (no trailing zero limbs, empty = 0).  Supports exactly what the
// moment accumulators need: add, multiply by a machine word, small powers,
// decimal round-trip, conversion to double for ratio tables.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(u128 v);

  void add(u128 v);
  void add(const BigUint& other);
  BigUint& operator+=(u128 v) { add(v); return *this; }
  BigUint& operator+=(const BigUint& o) { add(o); return *this; }

  void mul_u64(uint64_t m);

  // base^exp without overflow.
  static BigUint pow(uint64_t base, unsigned exp);

  static BigUint from_string(const std::string& s);
  std::string to_string() const;
  double to_double() const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u128() const { return limbs_.size() <= 2; }
  u128 to_u128() const;  // throws std::overflow_error if it does not fit

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator<(const BigUint& o) const;
  bool operator<=(const BigUint& o) const { return !(o < *this); }

 private:
  void trim();
  std::vector<uint64_t> limbs_;
};

}  // namespace kempner

#endif  // KEMPNER_WIDE_HPP

#include "kempner/wide.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kempner {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = char('0' + int(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

u128 u128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  constexpr u128 kMax = ~u128(0);
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + s);
    unsigned d = unsigned(c - '0');
    if (v > (kMax - d) / 10) throw std::out_of_range("integer literal exceeds 128 bits: " + s);
    v = v * 10 + d;
  }
  return v;
}

double u128_to_double(u128 v) {
  return double(static_cast<long double>(v));
}

uint64_t isqrt64(uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

uint64_t ikth_root(uint64_t n, int k) {
  if (k < 1) throw std::invalid_argument("ikth_root: k must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt64(n);
  auto pow_leq = [&](uint64_t b) {  // b^k <= n without overflow
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= b;
      if (acc > n) return false;
    }
    return true;
  };
  auto r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (r > 1 && !pow_leq(r)) --r;
  while (pow_leq(r + 1)) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// BigUint
// ---------------------------------------------------------------------------

BigUint::BigUint(u128 v) {
  if (v != 0) limbs_.push_back(uint64_t(v));
  if (v >> 64) limbs_.push_back(uint64_t(v >> 64));
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::add(u128 v) {
  std::size_t i = 0;
  while (v != 0) {
    if (i == limbs_.size()) limbs_.push_back(0);
    u128 t = u128(limbs_[i]) + uint64_t(v);
    limbs_[i] = uint64_t(t);
    v = (v >> 64) + (t >> 64);  // remaining high part plus carry
    ++i;
  }
}

void BigUint::add(const BigUint& other) {
  if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  unsigned carry = 0;
  std::size_t i = 0;
  for (; i < other.limbs_.size(); ++i) {
    u128 t = u128(limbs_[i]) + other.limbs_[i] + carry;
    limbs_[i] = uint64_t(t);
    carry = unsigned(t >> 64);
  }
  for (; carry && i < limbs_.size(); ++i) {
    u128 t = u128(limbs_[i]) + carry;
    limbs_[i] = uint64_t(t);
    carry = unsigned(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

void BigUint::mul_u64(uint64_t m) {
  if (m == 0) {
    limbs_.clear();
    return;
  }
  if (limbs_.empty()) return;
  uint64_t carry = 0;
  for (auto& limb : limbs_) {
    u128 t = u128(limb) * m + carry;
    limb = uint64_t(t);
    carry = uint64_t(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

BigUint BigUint::pow(uint64_t base, unsigned exp) {
  BigUint r(u128(1));
  for (unsigned i = 0; i < exp; ++i) r.mul_u64(base);
  return r;
}

BigUint BigUint::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  BigUint r;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + s);
    r.mul_u64(10);
    r.add(u128(unsigned(c - '0')));
  }
  return r;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  // Repeatedly divide by 1e19 (largest power of ten in a limb) and emit
  // 19-digit chunks.
  constexpr uint64_t kChunk = 10'000'000'000'000'000'000ull;
  std::vector<uint64_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    u128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u128 cur = (rem << 64) | work[i];
      work[i] = uint64_t(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(uint64_t(rem));
    if (!work.empty()) chunk.insert(0, 19 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

double BigUint::to_double() const {
  long double r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    r = r * 18446744073709551616.0L + limbs_[i];
  return double(r);
}

u128 BigUint::to_u128() const {
  if (!fits_u128()) throw std::overflow_error("BigUint does not fit in 128 bits");
  u128 v = 0;
  if (limbs_.size() > 1) v = u128(limbs_[1]) << 64;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

bool BigUint::operator<(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  return false;
}

}  // namespace kempner

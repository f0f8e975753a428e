#include "kempner/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kempner/errors.hpp"

namespace kempner {

PrimeTable sieve_primes(uint64_t limit, uint64_t memory_budget_bytes) {
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  // Bit sieve plus the output vector; refuse before allocating.
  double pi_estimate = limit < 17 ? 8.0
                                  : double(limit) / (std::log(double(limit)) - 1.1);
  uint64_t bytes = limit / 8 + uint64_t(pi_estimate) * sizeof(uint64_t) + 4096;
  if (bytes > memory_budget_bytes)
    throw capacity_error("sieve_primes: limit " + std::to_string(limit) +
                         " exceeds the memory budget");

  std::vector<uint64_t> bits(limit / 64 + 1, ~uint64_t(0));
  auto clear_bit = [&](uint64_t n) { bits[n >> 6] &= ~(uint64_t(1) << (n & 63)); };
  auto test_bit = [&](uint64_t n) { return (bits[n >> 6] >> (n & 63)) & 1; };
  clear_bit(0);
  clear_bit(1);
  for (uint64_t p = 2; p * p <= limit; ++p)
    if (test_bit(p))
      for (uint64_t m = p * p; m <= limit; m += p) clear_bit(m);

  table.primes.reserve(std::size_t(pi_estimate));
  for (uint64_t n = 2; n <= limit; ++n)
    if (test_bit(n)) table.primes.push_back(n);
  return table;
}

uint64_t largest_prime_factor(const Factorization& f) {
  return f.factors.empty() ? 1 : f.factors.back().prime;
}

Factorization FactorSieveBlock::factorization(std::size_t i) const {
  Factorization f;
  f.n = value(i);
  f.factors.reserve(nfac[i]);
  for (std::size_t j = 0; j < nfac[i]; ++j) f.factors.push_back(factor(i, j));
  return f;
}

void BlockFactorizer::run(uint64_t lo, uint64_t hi, FactorSieveBlock& out) {
  if (lo < 1) throw std::invalid_argument("factorize_block: lo must be >= 1");
  out.lo = lo;
  out.hi = hi = std::max(lo, hi);  // degenerate range -> empty block
  std::size_t n = std::size_t(hi - lo);
  out.start.assign(n + 1, 0);
  out.nfac.assign(n, 0);
  if (n == 0) {
    out.fprime.clear();
    out.fexp.clear();
    return;
  }
  if (hi - lo > (uint64_t(1) << 28))
    throw std::invalid_argument("factorize_block: block larger than 2^28");

  uint64_t sqrt_hi = isqrt64(hi - 1);
  if (base_->limit < sqrt_hi)
    throw std::invalid_argument("factorize_block: prime table limit " +
                                std::to_string(base_->limit) +
                                " below sqrt of range end " +
                                std::to_string(sqrt_hi));

  // Pass 1: count striking primes per offset.  Slot capacity is that count
  // plus one for a possible residual prime > sqrt(hi-1).
  for (uint64_t p : base_->primes) {
    if (p > sqrt_hi) break;
    for (uint64_t m = ((lo + p - 1) / p) * p; m < hi; m += p) ++out.nfac[m - lo];
  }
  uint32_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.start[i] = total;
    total += uint32_t(out.nfac[i]) + 1;
  }
  out.start[n] = total;
  out.fprime.resize(total);
  out.fexp.resize(total);

  // Pass 2: divide out each striking prime, recording (p, exponent).
  remaining_.resize(n);
  for (std::size_t i = 0; i < n; ++i) remaining_[i] = lo + i;
  std::fill(out.nfac.begin(), out.nfac.end(), uint8_t(0));
  for (uint64_t p : base_->primes) {
    if (p > sqrt_hi) break;
    for (uint64_t m = ((lo + p - 1) / p) * p; m < hi; m += p) {
      std::size_t i = std::size_t(m - lo);
      uint64_t r = remaining_[i] / p;
      uint32_t a = 1;
      while (r % p == 0) {
        r /= p;
        ++a;
      }
      remaining_[i] = r;
      uint32_t slot = out.start[i] + out.nfac[i]++;
      out.fprime[slot] = p;
      out.fexp[slot] = uint8_t(a);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (remaining_[i] > 1) {
      uint32_t slot = out.start[i] + out.nfac[i]++;
      out.fprime[slot] = remaining_[i];
      out.fexp[slot] = 1;
    }
  }
}

FactorSieveBlock factorize_block(uint64_t lo, uint64_t hi,
                                 const PrimeTable& base) {
  FactorSieveBlock out;
  BlockFactorizer(base).run(lo, hi, out);
  return out;
}

void kfree_into(uint64_t lo, uint64_t hi, int k, const PrimeTable& base,
                KfreeBlock& out) {
  if (lo < 1) throw std::invalid_argument("kfree_flags: lo must be >= 1");
  if (k < 2) throw std::invalid_argument("kfree_flags: k must be >= 2");
  out.lo = lo;
  out.hi = hi = std::max(lo, hi);
  out.k = k;
  out.flags.assign(std::size_t(hi - lo), 1);
  if (hi == lo) return;

  uint64_t root = ikth_root(hi - 1, k);
  if (base.limit < root)
    throw std::invalid_argument("kfree_flags: prime table limit below (hi-1)^(1/k)");

  for (uint64_t p : base.primes) {
    if (p > root) break;
    u128 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (pk >= hi) break;  // ikth_root rounds down; p^k can still overshoot
    auto q = uint64_t(pk);
    for (uint64_t m = ((lo + q - 1) / q) * q; m < hi; m += q)
      out.flags[std::size_t(m - lo)] = 0;
  }
}

KfreeBlock kfree_flags(uint64_t lo, uint64_t hi, int k, const PrimeTable& base) {
  KfreeBlock out;
  kfree_into(lo, hi, k, base, out);
  return out;
}

}  // namespace kempner

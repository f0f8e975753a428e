#ifndef KEMPNER_SIEVE_HPP
#define KEMPNER_SIEVE_HPP

#include <cstdint>
#include <vector>

#include "kempner/wide.hpp"

namespace kempner {

// ---------------------------------------------------------------------------
// Prime table
// ---------------------------------------------------------------------------

struct PrimeTable {
  uint64_t limit = 0;                // inclusive bound
  std::vector<uint64_t> primes;      // ascending, all primes <= limit

  std::size_t count() const { return primes.size(); }
};

inline constexpr uint64_t kDefaultSieveBudgetBytes = uint64_t(1) << 30;

// Simple bit sieve of Eratosthenes up to `limit` inclusive.  Throws
// capacity_error when the sieve plus the prime vector would exceed the
// memory budget.
PrimeTable sieve_primes(uint64_t limit,
                        uint64_t memory_budget_bytes = kDefaultSieveBudgetBytes);

// ---------------------------------------------------------------------------
// Factorizations
// ---------------------------------------------------------------------------

struct PrimeFactor {
  uint64_t prime = 0;
  uint32_t exponent = 0;
  bool operator==(const PrimeFactor&) const = default;
};

struct Factorization {
  uint64_t n = 1;
  std::vector<PrimeFactor> factors;  // ascending primes; empty iff n == 1
  bool operator==(const Factorization&) const = default;
};

uint64_t largest_prime_factor(const Factorization& f);  // 1 for n == 1

// Complete factorizations for a block [lo, hi).  Storage is a flat slot array
// indexed per offset (start[i] .. start[i] + nfac[i]), so one block costs two
// allocations instead of hi-lo of them.
struct FactorSieveBlock {
  uint64_t lo = 1, hi = 1;
  std::vector<uint32_t> start;   // size() + 1 slot offsets (capacities)
  std::vector<uint8_t> nfac;     // actual factor count per offset
  std::vector<uint64_t> fprime;  // slot storage: primes, ascending per entry
  std::vector<uint8_t> fexp;     // slot storage: exponents

  std::size_t size() const { return static_cast<std::size_t>(hi - lo); }
  uint64_t value(std::size_t i) const { return lo + i; }
  std::size_t factor_count(std::size_t i) const { return nfac[i]; }
  PrimeFactor factor(std::size_t i, std::size_t j) const {
    return {fprime[start[i] + j], fexp[start[i] + j]};
  }
  // Largest prime factor of value(i); 1 for the entry 1.
  uint64_t largest_prime(std::size_t i) const {
    return nfac[i] ? fprime[start[i] + nfac[i] - 1] : 1;
  }
  Factorization factorization(std::size_t i) const;
};

// Reusable factorizing engine; keeps its scratch between blocks so workers do
// not reallocate per block.
class BlockFactorizer {
 public:
  explicit BlockFactorizer(const PrimeTable& base) : base_(&base) {}
  void run(uint64_t lo, uint64_t hi, FactorSieveBlock& out);

 private:
  const PrimeTable* base_;
  std::vector<uint64_t> remaining_;
};

// One-shot convenience over BlockFactorizer.  Requires
// base.limit >= floor(sqrt(hi - 1)); a range with lo >= hi yields an empty
// block.  Residual cofactors > 1 after dividing out all base primes are
// recorded with exponent 1 (they are prime: any composite residual would have
// a factor <= sqrt(hi - 1)).
FactorSieveBlock factorize_block(uint64_t lo, uint64_t hi,
                                 const PrimeTable& base);

// ---------------------------------------------------------------------------
// k-free flags
// ---------------------------------------------------------------------------

struct KfreeBlock {
  uint64_t lo = 1, hi = 1;
  int k = 2;
  std::vector<uint8_t> flags;  // 1 iff value is k-free

  std::size_t size() const { return static_cast<std::size_t>(hi - lo); }
  uint64_t value(std::size_t i) const { return lo + i; }
  bool flag(std::size_t i) const { return flags[i] != 0; }
};

void kfree_into(uint64_t lo, uint64_t hi, int k, const PrimeTable& base,
                KfreeBlock& out);

// Strikes multiples of p^k for p <= (hi-1)^(1/k).  Independent of the factor
// sieve on purpose: the two implementations cross-check each other in tests.
KfreeBlock kfree_flags(uint64_t lo, uint64_t hi, int k, const PrimeTable& base);

}  // namespace kempner

#endif  // KEMPNER_SIEVE_HPP

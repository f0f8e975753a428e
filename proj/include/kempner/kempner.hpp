#ifndef KEMPNER_KEMPNER_HPP
#define KEMPNER_KEMPNER_HPP

#include <cstdint>
#include <optional>

#include "kempner/sieve.hpp"

namespace kempner {

// f(n): the smallest m >= 1 with n | m!.  f(1) = 1 (1 divides 1!), so the
// summation pipeline needs no special case for n = 1.

struct PrimePower {
  uint64_t p = 2;      // prime
  uint32_t a = 1;      // exponent >= 1
};

// Exponent of p in m!: sum_{j>=1} floor(m / p^j).
uint64_t legendre_valuation(uint64_t p, uint64_t m);

// Smallest m with legendre_valuation(p, m) >= a.  Always a multiple of p and
// at most a*p.  Walks the multiples of p (the valuation only changes there).
uint64_t kempner_prime_power(PrimePower pp);
inline uint64_t kempner_prime_power(uint64_t p, uint32_t a) {
  return kempner_prime_power(PrimePower{p, a});
}

// f(n) as the max of kempner_prime_power over the maximal prime powers of n.
uint64_t kempner(const Factorization& f);
uint64_t kempner(const FactorSieveBlock& block, std::size_t offset);

inline constexpr uint64_t kOracleBound = 10'000'000;

// Independent oracle: factors n by trial division (no PrimeTable) and scans
// m = 1, 2, 3, ... keeping a running valuation per prime of n until every one
// reaches its target.  Shares no code with the max-over-prime-powers path.
uint64_t kempner_bruteforce(uint64_t n, uint64_t bound = kOracleBound);

// P(n)^2 > n forces f(n) = P(n): everything below P divides P! already, and
// no smaller factorial contains the single copy of P.  Caller must pass
// P = largest_prime_factor(n); returns nullopt when the shortcut does not
// apply and f must be computed in full.
std::optional<uint64_t> lemma1_fast_path(uint64_t n, uint64_t P);

}  // namespace kempner

#endif  // KEMPNER_KEMPNER_HPP

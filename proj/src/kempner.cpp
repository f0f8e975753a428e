#include "kempner/kempner.hpp"

#include <stdexcept>

#include "kempner/wide.hpp"

namespace kempner {

uint64_t legendre_valuation(uint64_t p, uint64_t m) {
  if (p < 2) throw std::invalid_argument("legendre_valuation: p must be prime >= 2");
  uint64_t v = 0;
  while (m != 0) {
    m /= p;
    v += m;
  }
  return v;
}

uint64_t kempner_prime_power(PrimePower pp) {
  if (pp.p < 2) throw std::invalid_argument("kempner_prime_power: p must be prime >= 2");
  if (pp.a < 1) throw std::invalid_argument("kempner_prime_power: a must be >= 1");
  if (pp.a == 1) return pp.p;  // p first appears in p!
  // v_p((j*p)!) = j + v_p(j!), so walk j = 1, 2, ... adding 1 + v_p(j).
  uint64_t have = 0;
  for (uint64_t j = 1;; ++j) {
    ++have;
    for (uint64_t q = j; q % pp.p == 0; q /= pp.p) ++have;
    if (have >= pp.a) return j * pp.p;
  }
}

uint64_t kempner(const Factorization& f) {
  uint64_t best = 1;
  for (const auto& [p, a] : f.factors) {
    uint64_t m = a == 1 ? p : kempner_prime_power(p, a);
    if (m > best) best = m;
  }
  return best;
}

uint64_t kempner(const FactorSieveBlock& block, std::size_t offset) {
  uint64_t best = 1;
  std::size_t s = block.start[offset];
  for (std::size_t j = 0; j < block.nfac[offset]; ++j) {
    uint64_t p = block.fprime[s + j];
    uint8_t a = block.fexp[s + j];
    uint64_t m = a == 1 ? p : kempner_prime_power(p, a);
    if (m > best) best = m;
  }
  return best;
}

uint64_t kempner_bruteforce(uint64_t n, uint64_t bound) {
  if (n < 1) throw std::invalid_argument("kempner_bruteforce: n must be >= 1");
  if (n > bound)
    throw std::invalid_argument("kempner_bruteforce: n above oracle bound " +
                                std::to_string(bound));
  if (n == 1) return 1;

  // Trial-division factorization, on purpose not using any sieve machinery.
  struct Need {
    uint64_t p;
    uint64_t target;  // v_p(n)
    uint64_t have;    // running v_p(m!)
  };
  Need needs[16];
  std::size_t pending = 0;
  uint64_t rest = n;
  for (uint64_t d = 2; u128(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    uint64_t a = 0;
    while (rest % d == 0) {
      rest /= d;
      ++a;
    }
    needs[pending++] = {d, a, 0};
  }
  if (rest > 1) needs[pending++] = {rest, 1, 0};

  // Scan m upward; v_p(m!) grows by v_p(m) at each step.  Satisfied primes
  // are swapped out so the steady state checks only the stragglers.
  for (uint64_t m = 2;; ++m) {
    for (std::size_t i = 0; i < pending;) {
      Need& nd = needs[i];
      if (m % nd.p == 0) {
        for (uint64_t q = m / nd.p;; q /= nd.p) {
          ++nd.have;
          if (q % nd.p != 0) break;
        }
        if (nd.have >= nd.target) {
          needs[i] = needs[--pending];
          continue;
        }
      }
      ++i;
    }
    if (pending == 0) return m;
  }
}

std::optional<uint64_t> lemma1_fast_path(uint64_t n, uint64_t P) {
  if (n < 2) throw std::invalid_argument("lemma1_fast_path: n must be >= 2");
  if (u128(P) * P > n) return P;
  return std::nullopt;
}

}  // namespace kempner

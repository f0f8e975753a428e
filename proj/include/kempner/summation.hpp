#ifndef KEMPNER_SUMMATION_HPP
#define KEMPNER_SUMMATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "kempner/kempner.hpp"
#include "kempner/sieve.hpp"
#include "kempner/wide.hpp"

namespace kempner {

// Hard ceiling for x_max: beyond this the run would take days and the
// capacity analysis has not been validated, so run_sums refuses to start.
inline constexpr uint64_t kMaxXmax = 10'000'000'000ull;

struct SumConfig {
  uint64_t x_max = 0;
  std::vector<uint64_t> grid;          // ascending; empty = default geometric
  std::vector<int> ks = {2, 3};        // k-free variants, each in [2, 10]
  std::vector<int> moment_orders = {2};  // r values, each in [2, 4]
  uint64_t block_size = uint64_t(1) << 20;
  int workers = 1;

  // Geometric grid with ratio 10^(1/4) from 10^3 up to (and always
  // including) x_max.
  static std::vector<uint64_t> default_grid(uint64_t x_max);

  // Copy with the grid filled in / x_max appended if missing.
  SumConfig normalized() const;

  // Structural checks (ascending grid ending at x_max, k and r ranges,
  // workers >= 1, ...).  Throws std::invalid_argument.
  void validate() const;

  bool operator==(const SumConfig&) const = default;
};

// Exact partial sums.  The u128 fields are bounded by x_max^2 <= 1e20, far
// inside 128 bits; moments can reach x_max^(r+1) and live in BigUint.
struct RunningSums {
  std::vector<int> ks;
  std::vector<int> moment_orders;
  u128 sum_f = 0;
  u128 sum_P = 0;
  u128 sum_f_hard = 0;                 // restricted to P(n)^2 <= n (n=1 included)
  std::vector<u128> count_kfree;       // parallel to ks
  std::vector<u128> sum_f_kfree;       // parallel to ks
  std::vector<BigUint> sum_f_pow;      // parallel to moment_orders

  static RunningSums zeros(const std::vector<int>& ks,
                           const std::vector<int>& moment_orders);
  void merge(const RunningSums& other);
};

struct Checkpoint {
  uint64_t x = 0;
  u128 sum_f = 0;
  u128 sum_P = 0;
  u128 sum_f_hard = 0;
  std::vector<u128> count_kfree;
  std::vector<u128> sum_f_kfree;
  std::vector<BigUint> sum_f_pow;

  static Checkpoint snapshot(uint64_t x, const RunningSums& s);
  bool operator==(const Checkpoint&) const = default;
};

struct RunReport {
  SumConfig config;
  std::vector<Checkpoint> checkpoints;  // one per grid value, ascending
  double wall_seconds = 0.0;
};

// Advances `state` over one factor block.  kblocks must cover the identical
// range, one per state.ks entry, in the same order.  For each n the largest
// prime factor comes first, then either the P^2 > n shortcut or the full
// max over prime powers.  Exact integer arithmetic throughout.
RunningSums& accumulate_block(const FactorSieveBlock& block,
                              const std::vector<KfreeBlock>& kblocks,
                              RunningSums& state);

// Up-front capacity analysis: refuses (capacity_error) configurations whose
// accumulators could outgrow their exact representations.  run_sums calls
// this itself; the CLI calls it before emitting any output.
void check_run_capacity(const SumConfig& config);

// Full run over [1, x_max] with exact checkpoints at every grid value.
// Blocks are cut at checkpoint boundaries and merged in ascending order, so
// the output is byte-identical for any worker count.  on_checkpoint (if set)
// is called with each checkpoint as soon as it is final.
RunReport run_sums(const SumConfig& config,
                   const std::function<void(const Checkpoint&)>& on_checkpoint = {});

// Oracle: the same fields via kempner_bruteforce and trial division only,
// sharing no code with the sieve path.  x <= 1e6.
Checkpoint sum_f_naive(uint64_t x, const std::vector<int>& ks = {2, 3},
                       const std::vector<int>& moment_orders = {2});

// Cross-checkpoint invariants (sum_f >= sum_P, nested k-free sums, fields
// monotone along the grid, ...).  Throws std::logic_error on violation;
// run_sums calls this after every checkpoint merge.
void check_checkpoint_invariants(const Checkpoint& cur, const Checkpoint* prev);

}  // namespace kempner

#endif  // KEMPNER_SUMMATION_HPP

#include "kempner/summation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "kempner/errors.hpp"

namespace kempner {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

std::vector<uint64_t> SumConfig::default_grid(uint64_t x_max) {
  std::vector<uint64_t> grid;
  for (int j = 12;; ++j) {  // 10^(j/4) starting at 10^3
    auto v = uint64_t(std::llround(std::pow(10.0, j / 4.0)));
    if (v >= x_max) break;
    grid.push_back(v);
  }
  grid.push_back(x_max);
  return grid;
}

SumConfig SumConfig::normalized() const {
  SumConfig c = *this;
  if (c.grid.empty())
    c.grid = default_grid(c.x_max);
  else if (c.grid.back() != c.x_max)
    c.grid.push_back(c.x_max);
  return c;
}

void SumConfig::validate() const {
  if (x_max < 1) throw std::invalid_argument("sum config: x_max must be >= 1");
  if (grid.empty()) throw std::invalid_argument("sum config: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1 || grid[i] > x_max)
      throw std::invalid_argument("sum config: grid values must lie in [1, x_max]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("sum config: grid must be strictly ascending");
  }
  if (grid.back() != x_max)
    throw std::invalid_argument("sum config: grid must end at x_max");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 2 || ks[i] > 10)
      throw std::invalid_argument("sum config: k values must lie in [2, 10]");
    if (i > 0 && ks[i] <= ks[i - 1])
      throw std::invalid_argument("sum config: ks must be strictly ascending");
  }
  for (int r : moment_orders)
    if (r < 2 || r > 4)
      throw std::invalid_argument("sum config: moment orders must lie in [2, 4]");
  if (block_size < 1) throw std::invalid_argument("sum config: block_size must be >= 1");
  if (block_size > (uint64_t(1) << 28))
    throw std::invalid_argument("sum config: block_size above 2^28");
  if (workers < 1) throw std::invalid_argument("sum config: workers must be >= 1");
}

// ---------------------------------------------------------------------------
// Accumulators
// ---------------------------------------------------------------------------

RunningSums RunningSums::zeros(const std::vector<int>& ks,
                               const std::vector<int>& moment_orders) {
  RunningSums s;
  s.ks = ks;
  s.moment_orders = moment_orders;
  s.count_kfree.assign(ks.size(), 0);
  s.sum_f_kfree.assign(ks.size(), 0);
  s.sum_f_pow.assign(moment_orders.size(), BigUint{});
  return s;
}

void RunningSums::merge(const RunningSums& other) {
  sum_f += other.sum_f;
  sum_P += other.sum_P;
  sum_f_hard += other.sum_f_hard;
  for (std::size_t i = 0; i < count_kfree.size(); ++i) {
    count_kfree[i] += other.count_kfree[i];
    sum_f_kfree[i] += other.sum_f_kfree[i];
  }
  for (std::size_t i = 0; i < sum_f_pow.size(); ++i)
    sum_f_pow[i] += other.sum_f_pow[i];
}

Checkpoint Checkpoint::snapshot(uint64_t x, const RunningSums& s) {
  Checkpoint cp;
  cp.x = x;
  cp.sum_f = s.sum_f;
  cp.sum_P = s.sum_P;
  cp.sum_f_hard = s.sum_f_hard;
  cp.count_kfree = s.count_kfree;
  cp.sum_f_kfree = s.sum_f_kfree;
  cp.sum_f_pow = s.sum_f_pow;
  return cp;
}

RunningSums& accumulate_block(const FactorSieveBlock& block,
                              const std::vector<KfreeBlock>& kblocks,
                              RunningSums& state) {
  if (kblocks.size() != state.ks.size())
    throw std::invalid_argument("accumulate_block: one k-free block per k required");
  for (const auto& kb : kblocks)
    if (kb.lo != block.lo || kb.hi != block.hi)
      throw std::invalid_argument("accumulate_block: k-free block range mismatch");

  const std::size_t n_elems = block.size();
  const std::size_t n_ks = kblocks.size();
  const std::size_t n_rs = state.moment_orders.size();

  for (std::size_t i = 0; i < n_elems; ++i) {
    uint64_t n = block.value(i);
    uint64_t P, f;
    bool hard;
    if (n == 1) {
      P = 1;
      f = 1;
      hard = true;  // P(1)^2 = 1 <= 1: no special case for n = 1
    } else {
      P = block.largest_prime(i);
      auto fast = lemma1_fast_path(n, P);
      hard = !fast.has_value();
      f = fast ? *fast : kempner(block, i);
    }
    state.sum_f += f;
    state.sum_P += P;
    if (hard) state.sum_f_hard += f;
    for (std::size_t ki = 0; ki < n_ks; ++ki) {
      if (kblocks[ki].flags[i]) {
        state.count_kfree[ki] += 1;
        state.sum_f_kfree[ki] += f;
      }
    }
    for (std::size_t ri = 0; ri < n_rs; ++ri) {
      int r = state.moment_orders[ri];
      if (r <= 3 || f < (uint64_t(1) << 32)) {
        u128 fp = f;
        for (int e = 1; e < r; ++e) fp *= f;
        state.sum_f_pow[ri] += fp;
      } else {
        state.sum_f_pow[ri] += BigUint::pow(f, unsigned(r));
      }
    }
  }
  return state;
}

void check_checkpoint_invariants(const Checkpoint& cur, const Checkpoint* prev) {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("checkpoint invariant violated at x = ") +
                           std::to_string(cur.x) + ": " + what);
  };
  if (cur.sum_f < cur.sum_P) fail("sum_f < sum_P");
  if (cur.sum_f_hard > cur.sum_f) fail("sum_f_hard > sum_f");
  for (std::size_t i = 0; i < cur.sum_f_kfree.size(); ++i) {
    if (cur.sum_f_kfree[i] > cur.sum_f) fail("sum_f_kfree > sum_f");
    if (cur.count_kfree[i] > cur.x) fail("count_kfree > x");
    if (i > 0 && cur.sum_f_kfree[i - 1] > cur.sum_f_kfree[i])
      fail("k-free sums not nested");  // k-free sets grow with k
  }
  if (prev) {
    if (prev->sum_f > cur.sum_f || prev->sum_P > cur.sum_P ||
        prev->sum_f_hard > cur.sum_f_hard)
      fail("fields not monotone along the grid");
    for (std::size_t i = 0; i < cur.sum_f_kfree.size(); ++i)
      if (prev->sum_f_kfree[i] > cur.sum_f_kfree[i] ||
          prev->count_kfree[i] > cur.count_kfree[i])
        fail("k-free fields not monotone along the grid");
    for (std::size_t i = 0; i < cur.sum_f_pow.size(); ++i)
      if (cur.sum_f_pow[i] < prev->sum_f_pow[i])
        fail("moment fields not monotone along the grid");
  }
}

// ---------------------------------------------------------------------------
// Parallel driver
// ---------------------------------------------------------------------------

namespace {

struct BlockJob {
  uint64_t lo, hi;  // [lo, hi)
  bool ends_checkpoint;
};

// Blocks of at most block_size, additionally cut at every grid value so each
// checkpoint is exact, never interpolated.
std::vector<BlockJob> plan_blocks(const SumConfig& cfg) {
  std::vector<BlockJob> jobs;
  uint64_t cur = 1;
  for (uint64_t g : cfg.grid) {
    while (cur <= g) {
      uint64_t next = std::min(g + 1, cur + cfg.block_size);
      jobs.push_back({cur, next, next == g + 1});
      cur = next;
    }
  }
  return jobs;
}

}  // namespace

void check_run_capacity(const SumConfig& config) {
  // With x_max <= 1e10 every u128 field is bounded by x_max^2 <= 1e20
  // << 2^127, and moments live in BigUint, so nothing can wrap.  The
  // per-element u128 power fast path is guarded in accumulate_block itself.
  if (config.x_max > kMaxXmax)
    throw capacity_error("run_sums: x_max " + std::to_string(config.x_max) +
                         " above the validated capacity " + std::to_string(kMaxXmax));
}

RunReport run_sums(const SumConfig& config,
                   const std::function<void(const Checkpoint&)>& on_checkpoint) {
  auto t0 = std::chrono::steady_clock::now();
  SumConfig cfg = config.normalized();
  cfg.validate();
  check_run_capacity(cfg);

  const PrimeTable table = sieve_primes(isqrt64(cfg.x_max));
  const std::vector<BlockJob> jobs = plan_blocks(cfg);

  std::vector<std::optional<RunningSums>> slots(jobs.size());
  std::mutex mu;
  std::condition_variable slot_ready;
  std::atomic<std::size_t> next_job{0};

  auto worker = [&]() {
    BlockFactorizer factorizer(table);
    FactorSieveBlock block;
    std::vector<KfreeBlock> kblocks(cfg.ks.size());
    for (;;) {
      std::size_t j = next_job.fetch_add(1);
      if (j >= jobs.size()) return;
      factorizer.run(jobs[j].lo, jobs[j].hi, block);
      for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki)
        kfree_into(jobs[j].lo, jobs[j].hi, cfg.ks[ki], table, kblocks[ki]);
      RunningSums partial = RunningSums::zeros(cfg.ks, cfg.moment_orders);
      accumulate_block(block, kblocks, partial);
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[j] = std::move(partial);
      }
      slot_ready.notify_one();
    }
  };

  std::size_t n_workers = std::min<std::size_t>(std::size_t(cfg.workers),
                                                std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);

  // Single reducer merges partials in block order: integer addition in a
  // fixed order makes the result independent of worker scheduling.
  RunReport report;
  report.config = cfg;
  RunningSums running = RunningSums::zeros(cfg.ks, cfg.moment_orders);
  std::size_t grid_idx = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    RunningSums partial = RunningSums::zeros(cfg.ks, cfg.moment_orders);
    {
      std::unique_lock<std::mutex> lock(mu);
      slot_ready.wait(lock, [&] { return slots[j].has_value(); });
      partial = std::move(*slots[j]);
      slots[j].reset();
    }
    running.merge(partial);
    if (jobs[j].ends_checkpoint) {
      Checkpoint cp = Checkpoint::snapshot(cfg.grid[grid_idx], running);
      check_checkpoint_invariants(
          cp, report.checkpoints.empty() ? nullptr : &report.checkpoints.back());
      if (on_checkpoint) on_checkpoint(cp);
      report.checkpoints.push_back(std::move(cp));
      ++grid_idx;
    }
  }
  for (auto& t : pool) t.join();

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

Checkpoint sum_f_naive(uint64_t x, const std::vector<int>& ks,
                       const std::vector<int>& moment_orders) {
  if (x < 1) throw std::invalid_argument("sum_f_naive: x must be >= 1");
  if (x > 1'000'000) throw std::invalid_argument("sum_f_naive: x above oracle bound 1e6");

  Checkpoint cp;
  cp.x = x;
  cp.count_kfree.assign(ks.size(), 0);
  cp.sum_f_kfree.assign(ks.size(), 0);
  cp.sum_f_pow.assign(moment_orders.size(), BigUint{});

  for (uint64_t n = 1; n <= x; ++n) {
    // Trial division, independent of the sieve module.
    uint64_t rest = n, P = 1;
    uint32_t max_exp = n == 1 ? 0 : 1;
    for (uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
      if (rest % d != 0) continue;
      uint32_t a = 0;
      while (rest % d == 0) {
        rest /= d;
        ++a;
      }
      P = d;
      max_exp = std::max(max_exp, a);
    }
    if (rest > 1) P = rest;

    uint64_t f = kempner_bruteforce(n, std::max<uint64_t>(x, kOracleBound));
    cp.sum_f += f;
    cp.sum_P += P;
    if (u128(P) * P <= n) cp.sum_f_hard += f;
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      if (max_exp < uint32_t(ks[ki])) {
        cp.count_kfree[ki] += 1;
        cp.sum_f_kfree[ki] += f;
      }
    }
    for (std::size_t ri = 0; ri < moment_orders.size(); ++ri)
      cp.sum_f_pow[ri] += BigUint::pow(f, unsigned(moment_orders[ri]));
  }
  return cp;
}

}  // namespace kempner

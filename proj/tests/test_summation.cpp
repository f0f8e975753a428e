#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <algorithm>

#include "kempner/errors.hpp"
#include "kempner/report_io.hpp"
#include "kempner/summation.hpp"

using namespace kempner;

TEST_CASE("accumulate_block over [1,11)") {
  auto base = sieve_primes(isqrt64(10));
  auto blk = factorize_block(1, 11, base);
  std::vector<KfreeBlock> kblocks{kfree_flags(1, 11, 2, base)};
  auto state = RunningSums::zeros({2}, {2});
  accumulate_block(blk, kblocks, state);

  CHECK(state.sum_f == 40);  // f: 1,2,3,4,5,3,7,4,6,5
  CHECK(state.sum_P == 33);  // P: 1,2,3,2,5,3,7,2,3,5
  CHECK(state.sum_f_hard == 15);  // hard set {1,4,8,9}: 1+4+4+6
  CHECK(state.count_kfree[0] == 7);
  CHECK(state.sum_f_kfree[0] == 26);  // 1+2+3+5+3+7+5
  CHECK(state.sum_f_pow[0] == BigUint(u128(190)));  // sum of f^2

  // empty block leaves the state untouched
  auto empty_blk = factorize_block(11, 11, base);
  std::vector<KfreeBlock> empty_k{kfree_flags(11, 11, 2, base)};
  auto before = state;
  accumulate_block(empty_blk, empty_k, state);
  CHECK(state.sum_f == before.sum_f);
  CHECK(state.sum_f_pow[0] == before.sum_f_pow[0]);
}

TEST_CASE("accumulate_block range mismatch is rejected") {
  auto base = sieve_primes(4);
  auto blk = factorize_block(1, 11, base);
  std::vector<KfreeBlock> wrong{kfree_flags(1, 10, 2, base)};
  auto state = RunningSums::zeros({2}, {});
  CHECK_THROWS_AS(accumulate_block(blk, wrong, state), std::invalid_argument);
}

TEST_CASE("sum_f_naive examples") {
  auto cp1 = sum_f_naive(1);
  CHECK(cp1.sum_f == 1);
  CHECK(cp1.sum_P == 1);
  CHECK(cp1.sum_f_hard == 1);

  auto cp10 = sum_f_naive(10);
  CHECK(cp10.sum_f == 40);
  CHECK(cp10.sum_P == 33);
  CHECK(cp10.sum_f_hard == 15);
  CHECK(cp10.count_kfree[0] == 7);
  CHECK(cp10.sum_f_kfree[0] == 26);
  CHECK(cp10.count_kfree[1] == 9);       // 3-free: everything but 8
  CHECK(cp10.sum_f_kfree[1] == 36);      // 40 - f(8)
  CHECK(cp10.sum_f_pow[0] == BigUint(u128(190)));

  CHECK_THROWS_AS(sum_f_naive(2000000), std::invalid_argument);
}

TEST_CASE("run_sums single checkpoint x = 10") {
  SumConfig cfg;
  cfg.x_max = 10;
  cfg.grid = {10};
  auto report = run_sums(cfg);
  REQUIRE(report.checkpoints.size() == 1);
  CHECK(report.checkpoints[0] == sum_f_naive(10));
}

TEST_CASE("run_sums equals the oracle at 10, 100, 1000, 10000") {
  SumConfig cfg;
  cfg.x_max = 10000;
  cfg.grid = {10, 100, 1000, 10000};
  cfg.block_size = 512;  // forces many blocks and mid-block checkpoints
  auto report = run_sums(cfg);
  REQUIRE(report.checkpoints.size() == 4);
  for (const auto& cp : report.checkpoints) {
    auto want = sum_f_naive(cp.x);
    if (!(cp == want)) {
      CAPTURE(cp.x);
      REQUIRE(cp == want);
    }
  }
}

TEST_CASE("prefix property: shared grid values get identical checkpoints") {
  SumConfig small;
  small.x_max = 10;
  small.grid = {10};
  SumConfig big;
  big.x_max = 100;
  big.grid = {10, 100};
  auto rs = run_sums(small);
  auto rb = run_sums(big);
  CHECK(rs.checkpoints[0] == rb.checkpoints[0]);
}

TEST_CASE("determinism: identical CSV for 1, 2, 8 workers") {
  std::string rendered[3];
  int i = 0;
  for (int workers : {1, 2, 8}) {
    SumConfig cfg;
    cfg.x_max = 100000;
    cfg.block_size = 1 << 12;
    cfg.workers = workers;
    auto report = run_sums(cfg);
    rendered[i++] = report_csv(report);
  }
  CHECK(rendered[0] == rendered[1]);
  CHECK(rendered[0] == rendered[2]);
}

TEST_CASE("checkpoint invariants hold along a run") {
  SumConfig cfg;
  cfg.x_max = 20000;
  cfg.ks = {2, 3, 4};
  cfg.moment_orders = {2, 3};
  cfg.workers = 2;
  auto report = run_sums(cfg);
  const Checkpoint* prev = nullptr;
  for (const auto& cp : report.checkpoints) {
    check_checkpoint_invariants(cp, prev);  // would throw on violation
    CHECK(cp.sum_f >= cp.sum_P);
    CHECK(cp.sum_f_kfree[0] <= cp.sum_f_kfree[1]);
    CHECK(cp.sum_f_kfree[1] <= cp.sum_f_kfree[2]);
    prev = &cp;
  }
  CHECK(report.checkpoints.back().x == 20000);
}

TEST_CASE("config validation") {
  SumConfig cfg;
  cfg.x_max = 0;
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);

  cfg.x_max = 100;
  cfg.grid = {50, 20, 100};
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);

  cfg.grid = {200};
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);

  cfg.grid = {100};
  cfg.ks = {11};
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);

  cfg.ks = {2};
  cfg.moment_orders = {5};
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);

  cfg.moment_orders = {2};
  cfg.workers = 0;
  CHECK_THROWS_AS(run_sums(cfg), std::invalid_argument);
}

TEST_CASE("capacity refusal beyond the validated ceiling") {
  SumConfig cfg;
  cfg.x_max = kMaxXmax + 1;
  CHECK_THROWS_AS(run_sums(cfg), capacity_error);
}

TEST_CASE("default grid shape") {
  auto grid = SumConfig::default_grid(100000);
  REQUIRE(!grid.empty());
  CHECK(grid.front() == 1000);
  CHECK(grid.back() == 100000);
  // contains every power of ten and the half-decade points
  for (uint64_t v : {1000ull, 1778ull, 3162ull, 5623ull, 10000ull, 31623ull, 100000ull})
    CHECK(std::find(grid.begin(), grid.end(), v) != grid.end());
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

  auto tiny = SumConfig::default_grid(10);
  CHECK(tiny == std::vector<uint64_t>{10});
}

TEST_CASE("checkpoints stream in order through the callback") {
  SumConfig cfg;
  cfg.x_max = 1000;
  cfg.grid = {10, 100, 1000};
  std::vector<uint64_t> seen;
  auto report = run_sums(cfg, [&](const Checkpoint& cp) { seen.push_back(cp.x); });
  CHECK(seen == std::vector<uint64_t>{10, 100, 1000});
  CHECK(report.checkpoints.size() == 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <cmath>

#include "kempner/analysis.hpp"
#include "kempner/zeta.hpp"

using namespace kempner;

namespace {

// Small reports assembled from the brute-force oracle; analysis never sees
// the sieve path here.
RunReport oracle_report(std::vector<uint64_t> grid) {
  RunReport r;
  r.config.x_max = grid.back();
  r.config.grid = grid;
  for (uint64_t x : grid) r.checkpoints.push_back(sum_f_naive(x));
  return r;
}

}  // namespace

TEST_CASE("theorem3_table examples at x = 10") {
  auto report = oracle_report({10});
  double half_zeta2 = zeta(2.0) / 2.0;

  auto rows = theorem3_table(report, half_zeta2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].x == 10);
  CHECK(rows[0].empirical == 40);
  CHECK(rows[0].main_term == doctest::Approx(35.7195).epsilon(1e-4));
  CHECK(rows[0].ratio == doctest::Approx(1.11983).epsilon(1e-4));

  auto rows2 = theorem3_table(report, zeta(2.0));
  CHECK(rows2[0].main_term == doctest::Approx(71.4390).epsilon(1e-4));
  CHECK(rows2[0].ratio == doctest::Approx(0.55990).epsilon(1e-4));
}

TEST_CASE("theorem3_table drops x < 3 and handles empty grids") {
  RunReport empty;
  empty.config.x_max = 1;
  empty.config.grid = {1};
  CHECK(theorem3_table(empty, 1.0).empty());

  auto report = oracle_report({2, 10});
  CHECK(theorem3_table(report, 1.0).size() == 1);  // only x = 10
}

TEST_CASE("theorem3_table scaling sanity: c vs 2c") {
  auto report = oracle_report({10, 100, 1000});
  auto a = theorem3_table(report, 0.75);
  auto b = theorem3_table(report, 1.5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ratio == 2.0 * b[i].ratio);  // exact: denominator doubles
    CHECK(a[i].main_term * 2.0 == b[i].main_term);
  }
}

TEST_CASE("theorem4_table examples at x = 10, k = 2") {
  auto report = oracle_report({10});
  auto rows = theorem4_table(report, 2, 1.25);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].empirical == 26);
  CHECK(rows[0].main_term == doctest::Approx(54.2868).epsilon(1e-4));
  CHECK(rows[0].ratio == doctest::Approx(0.478937).epsilon(1e-4));

  auto rows2 = theorem4_table(report, 2, 0.75991);
  CHECK(rows2[0].main_term == doctest::Approx(33.0022).epsilon(1e-4));
  CHECK(rows2[0].ratio == doctest::Approx(0.787827).epsilon(1e-4));

  CHECK_THROWS_AS(theorem4_table(report, 5, 1.0), std::invalid_argument);
}

TEST_CASE("eq1_table examples") {
  auto report = oracle_report({3, 10});
  auto rows = eq1_table(report);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].x == 3);
  CHECK(rows[0].empirical == 6);  // P: 1,2,3
  CHECK(rows[0].ratio == doctest::Approx(0.890493).epsilon(1e-4));
  CHECK(rows[1].empirical == 33);
  CHECK(rows[1].ratio == doctest::Approx(0.923865).epsilon(1e-4));

  auto single = eq1_table(oracle_report({10}));
  CHECK(single.size() == 1);
}

TEST_CASE("ratio identity: ratio(sum_f)/ratio(sum_P) = sum_f/sum_P at equal c") {
  auto report = oracle_report({10, 100, 1000});
  double c = coefficients({}).alladi_erdos;
  auto rf = theorem3_table(report, c);  // same c as eq1_table
  auto rp = eq1_table(report);
  REQUIRE(rf.size() == rp.size());
  for (std::size_t i = 0; i < rf.size(); ++i) {
    double want = u128_to_double(rf[i].empirical) / u128_to_double(rp[i].empirical);
    CHECK(rf[i].ratio / rp[i].ratio == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("eq2_check examples") {
  auto report = oracle_report({10});
  auto rows = eq2_check(report, 2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].count == 7);
  CHECK(rows[0].error_scaled == doctest::Approx(0.291163).epsilon(1e-4));

  auto r1 = eq2_check(oracle_report({1}), 2);
  CHECK(r1[0].count == 1);
  CHECK(r1[0].error_scaled ==
        doctest::Approx(std::abs(1.0 - 1.0 / zeta(2.0))).epsilon(1e-9));

  CHECK_THROWS_AS(eq2_check(report, 7), std::invalid_argument);
}

TEST_CASE("eq5_table shape") {
  auto report = oracle_report({10, 100});
  auto rows = eq5_table(report);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].sum_f_hard == 15);
  CHECK(rows[0].bound == doctest::Approx(std::pow(10.0, 1.5) * std::log(10.0)));
  CHECK(rows[0].ratio > 0);
}

TEST_CASE("lemma2_check at x = 100, k = 2") {
  auto res = lemma2_check(100.0, 2);
  // Direct arithmetic over the hand-listed squarefree n <= 10.
  double want = 0;
  for (uint64_t n : {1, 2, 3, 5, 6, 7, 10})
    want += 1.0 / (double(n) * n * std::log(100.0 / n));
  CHECK(res.lhs == doctest::Approx(want).epsilon(1e-12));
  // n = 1 term alone is 1/ln(100)
  CHECK(1.0 / std::log(100.0) == doctest::Approx(0.217147).epsilon(1e-4));
  CHECK(res.rhs == doctest::Approx(zeta(2.0) / zeta(4.0) / std::log(100.0)).epsilon(1e-12));
  CHECK(res.scaled_diff ==
        doctest::Approx(std::abs(res.lhs - res.rhs) * std::pow(std::log(100.0), 2)));
  CHECK_THROWS_AS(lemma2_check(5.0, 2), std::invalid_argument);
}

TEST_CASE("lemma2 scaled_diff stays bounded on a quick grid") {
  double base = lemma2_check(1e4, 2).scaled_diff;
  double mid = lemma2_check(1e5, 2).scaled_diff;
  double top = lemma2_check(1e6, 2).scaled_diff;
  CHECK(std::max({base, mid, top}) <= 4.0 * base);
}

TEST_CASE("eq12_check examples") {
  // Partial sum over squarefree n <= 10 of 1/n^2, by direct arithmetic:
  // 1 + 1/4 + 1/9 + 1/25 + 1/36 + 1/49 + 1/100.
  double direct = 1.0 + 1.0 / 4 + 1.0 / 9 + 1.0 / 25 + 1.0 / 36 + 1.0 / 49 + 1.0 / 100;
  CHECK(direct == doctest::Approx(1.4592971).epsilon(1e-7));
  auto r10 = eq12_check(2, 10);
  CHECK(r10.partial == doctest::Approx(direct).epsilon(1e-12));

  auto r = eq12_check(2, 100000);
  CHECK(r.target == doctest::Approx(1.5198177546).epsilon(1e-9));
  CHECK(r.diff <= r.tail_bound + 1e-12);

  // k large: almost everything is 10-free, partial approaches zeta(2)
  auto r10free = eq12_check(10, 1000);
  CHECK(std::abs(r10free.partial - zeta(2.0)) <= 1e-3);
}

TEST_CASE("eq12 contract holds for k in [2,10] at N = 1000") {
  for (int k = 2; k <= 10; ++k) {
    auto r = eq12_check(k, 1000);
    CHECK(r.diff <= r.tail_bound + 1e-12);
  }
}

TEST_CASE("discriminate basics") {
  auto report = oracle_report({10, 100, 1000});
  auto rep = discriminate(report, TargetSum::f(),
                          {{"a", zeta(2.0)}, {"b", zeta(2.0) / 2.0}});
  CHECK(rep.tracks.size() == 2);
  CHECK(rep.xs == std::vector<uint64_t>{10, 100, 1000});
  CHECK(rep.verdict == "b");  // already visible by x = 1000

  auto same = discriminate(report, TargetSum::f(), {{"c1", 0.8}, {"c1", 0.8}});
  CHECK(same.verdict == "c1");

  CHECK_THROWS_AS(discriminate(report, TargetSum::f(), {{"only", 1.0}}),
                  std::invalid_argument);
  auto narrow = oracle_report({200, 1000});
  CHECK_THROWS_AS(discriminate(narrow, TargetSum::f(), {{"a", 1.0}, {"b", 2.0}}),
                  std::invalid_argument);
}

TEST_CASE("discriminate on k-free target") {
  auto report = oracle_report({10, 100, 1000});
  auto rep = discriminate(report, TargetSum::f_kfree(2),
                          {{"stated", 1.25}, {"consistent", 0.75991}});
  CHECK(rep.target.label() == "sum_f_kfree_2");
  CHECK((rep.verdict == "stated" || rep.verdict == "consistent"));
}

TEST_CASE("moment_fit example r = 2, x = 10") {
  auto report = oracle_report({10});
  auto rows = moment_fit(report, 2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].moment == BigUint(u128(190)));
  CHECK(rows[0].estimate == doctest::Approx(1.00736).epsilon(1e-4));
  CHECK_THROWS_AS(moment_fit(report, 3), std::invalid_argument);
}

TEST_CASE("analysis is a pure function of the report") {
  auto report = oracle_report({10, 100, 1000});
  auto a = theorem3_table(report, 1.0);
  auto b = theorem3_table(report, 1.0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].main_term == b[i].main_term);
    CHECK(a[i].ratio == b[i].ratio);
    CHECK(a[i].implied_constant == b[i].implied_constant);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "kempner/analysis.hpp"
#include "kempner/report_io.hpp"
#include "kempner/summation.hpp"

using namespace kempner;

TEST_CASE("checkpoint CSV schema") {
  SumConfig cfg;
  cfg.x_max = 10;
  cfg.grid = {10};
  cfg.ks = {2, 3};
  cfg.moment_orders = {2};
  CHECK(checkpoint_csv_header(cfg) ==
        "x,sum_f,sum_P,sum_f_hard,count_kfree_2,count_kfree_3,"
        "sum_f_kfree_2,sum_f_kfree_3,sum_f_pow_2");

  auto report = run_sums(cfg);
  CHECK(checkpoint_csv_row(report.checkpoints[0]) == "10,40,33,15,7,9,26,36,190");
}

TEST_CASE("integers render in full decimal") {
  Checkpoint cp;
  cp.x = 3;
  cp.sum_f = u128_from_string("340282366920938463463374607431768211455");
  cp.sum_P = 1;
  cp.sum_f_hard = 0;
  cp.sum_f_pow.push_back(BigUint::pow(10, 45));
  std::string row = checkpoint_csv_row(cp);
  CHECK(row == "3,340282366920938463463374607431768211455,1,0,1" +
                   std::string(45, '0'));
}

TEST_CASE("format_real uses 12 significant digits, no padding") {
  CHECK(format_real(1.25) == "1.25");
  CHECK(format_real(0.4789373814) == "0.4789373814");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("report JSON round-trips and analysis output is unchanged") {
  SumConfig cfg;
  cfg.x_max = 2000;
  cfg.grid = {10, 200, 2000};
  cfg.workers = 2;
  auto report = run_sums(cfg);

  auto j = report_to_json(report);
  auto text = j.dump();
  auto back = report_from_json(nlohmann::json::parse(text));

  CHECK(back.config == report.config);
  REQUIRE(back.checkpoints.size() == report.checkpoints.size());
  for (std::size_t i = 0; i < back.checkpoints.size(); ++i)
    CHECK(back.checkpoints[i] == report.checkpoints[i]);

  auto t1 = theorem3_table(report, 0.8224670334);
  auto t2 = theorem3_table(back, 0.8224670334);
  REQUIRE(t1.size() == t2.size());
  for (std::size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].ratio == t2[i].ratio);
    CHECK(t1[i].main_term == t2[i].main_term);
    CHECK(t1[i].implied_constant == t2[i].implied_constant);
  }
  CHECK(report_csv(report) == report_csv(back));
}

TEST_CASE("checkpoint JSON accepts plain numbers for exact fields") {
  nlohmann::json j = {{"x", 10},
                      {"sum_f", 40},
                      {"sum_P", "33"},
                      {"sum_f_hard", 15},
                      {"count_kfree", {7}},
                      {"sum_f_kfree", {"26"}},
                      {"sum_f_pow", {190}}};
  auto cp = checkpoint_from_json(j);
  CHECK(cp.sum_f == 40);
  CHECK(cp.sum_P == 33);
  CHECK(cp.sum_f_pow[0] == BigUint(u128(190)));
}

TEST_CASE("theorem row CSV") {
  TheoremCheckRow row;
  row.x = 10;
  row.empirical = 40;
  row.main_term = 35.7195;
  row.ratio = 1.11983;
  row.implied_constant = 0.227;
  row.signed_residual = 0.227;
  CHECK(theorem_rows_csv_header(false) ==
        "x,empirical,main_term,ratio,implied_constant,signed_residual");
  CHECK(theorem_rows_csv_header(true) ==
        "candidate,c,x,empirical,main_term,ratio,implied_constant,signed_residual");
  CHECK(theorem_row_csv(row) == "10,40,35.7195,1.11983,0.227,0.227");
  CHECK(theorem_row_csv(row, "stated", 1.25, true) ==
        "stated,1.25,10,40,35.7195,1.11983,0.227,0.227");
}

TEST_CASE("discrimination JSON carries verdict and tracks") {
  SumConfig cfg;
  cfg.x_max = 2000;
  cfg.grid = {10, 2000};
  auto report = run_sums(cfg);
  auto rep = discriminate(report, TargetSum::f(), {{"a", 1.6449}, {"b", 0.82247}});
  auto j = discrimination_to_json(rep);
  CHECK(j.at("target") == "sum_f");
  CHECK(j.at("verdict") == rep.verdict);
  CHECK(j.at("candidates").size() == 2);
}

#ifndef KEMPNER_ANALYSIS_HPP
#define KEMPNER_ANALYSIS_HPP

#include <string>
#include <vector>

#include "kempner/summation.hpp"
#include "kempner/wide.hpp"

namespace kempner {

// All logs here are natural logs.  Tables are pure functions of a RunReport
// plus constants: re-running analysis on a stored report reproduces them
// byte for byte.

// One row of an asymptotic comparison against a main term c * x^2 / log x.
struct TheoremCheckRow {
  uint64_t x = 0;
  u128 empirical = 0;
  double main_term = 0;        // c * x^2 / ln x
  double ratio = 0;            // empirical / main_term
  double implied_constant = 0;  // |empirical - main_term| * ln^2 x / x^2
  double signed_residual = 0;   // same, without the absolute value
};

// sum_f rows for candidate constant c (one row per checkpoint with x >= 3).
std::vector<TheoremCheckRow> theorem3_table(const RunReport& report, double c);

// sum_f restricted to k-free n; k must be in the report's ks.
std::vector<TheoremCheckRow> theorem4_table(const RunReport& report, int k,
                                            double c);

// sum_P rows with the Alladi-Erdos constant pi^2/12.
std::vector<TheoremCheckRow> eq1_table(const RunReport& report);

// k-free counting error |S_k(x) - x/zeta(k)| / x^(1/k).
struct Eq2Row {
  uint64_t x = 0;
  u128 count = 0;
  double expected = 0;
  double error_scaled = 0;
};
std::vector<Eq2Row> eq2_check(const RunReport& report, int k);

// sum_f_hard against the x^(3/2) * ln x envelope.
struct Eq5Row {
  uint64_t x = 0;
  u128 sum_f_hard = 0;
  double bound = 0;   // x^(3/2) * ln x
  double ratio = 0;   // sum_f_hard / bound
};
std::vector<Eq5Row> eq5_table(const RunReport& report);

// Weighted k-free sum over n <= sqrt(x):
//   lhs = sum delta_k(n) / (n^2 * ln(x/n))   (summed in descending n)
//   rhs = (1/ln x) * zeta(2)/zeta(2k)
// scaled_diff = |lhs - rhs| * ln^2 x should stay bounded as x grows.
struct Lemma2Result {
  double x = 0;
  int k = 2;
  double lhs = 0;
  double rhs = 0;
  double scaled_diff = 0;
};
Lemma2Result lemma2_check(double x, int k);

// Dirichlet partial sum sum_{n<=N} delta_k(n)/n^2 against zeta(2)/zeta(2k);
// the tail obeys sum_{n>N} n^-2 < 1/N, so diff <= 1/N + 1e-12.
struct Eq12Result {
  int k = 2;
  uint64_t n = 0;
  double partial = 0;
  double target = 0;
  double diff = 0;
  double tail_bound = 0;  // 1/N
};
Eq12Result eq12_check(int k, uint64_t n);

// Which accumulated series a discrimination run reads.
struct TargetSum {
  enum class Kind { sum_f, sum_P, sum_f_hard, sum_f_kfree };
  Kind kind = Kind::sum_f;
  int k = 0;  // used by sum_f_kfree

  static TargetSum f() { return {Kind::sum_f, 0}; }
  static TargetSum P() { return {Kind::sum_P, 0}; }
  static TargetSum f_hard() { return {Kind::sum_f_hard, 0}; }
  static TargetSum f_kfree(int k) { return {Kind::sum_f_kfree, k}; }
  std::string label() const;
};

struct Candidate {
  std::string label;
  double c = 0;
};

// Per-candidate |ratio - 1| over the grid; verdict = candidate closest to 1
// at the largest x, ties broken toward the more decreasing trend (smaller
// last/first ratio of |ratio - 1|).
struct DiscriminationReport {
  struct Track {
    std::string label;
    double c = 0;
    std::vector<double> abs_ratio_err;  // parallel to xs
  };
  TargetSum target;
  std::vector<uint64_t> xs;
  std::vector<Track> tracks;
  std::string verdict;
};

// Requires >= 2 candidates and a grid spanning at least two decades.
DiscriminationReport discriminate(const RunReport& report, TargetSum target,
                                  const std::vector<Candidate>& candidates);

// Empirical moment constant: sum f(n)^r * ln^r x / x^(r+1) per checkpoint.
struct MomentFitRow {
  uint64_t x = 0;
  BigUint moment;
  double estimate = 0;
};
std::vector<MomentFitRow> moment_fit(const RunReport& report, int r);

}  // namespace kempner

#endif  // KEMPNER_ANALYSIS_HPP

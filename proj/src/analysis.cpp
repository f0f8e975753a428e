#include "kempner/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kempner/zeta.hpp"

namespace kempner {

namespace {

std::size_t k_index(const RunReport& report, int k) {
  const auto& ks = report.config.ks;
  auto it = std::find(ks.begin(), ks.end(), k);
  if (it == ks.end())
    throw std::invalid_argument("analysis: k = " + std::to_string(k) +
                                " not present in the report");
  return std::size_t(it - ks.begin());
}

TheoremCheckRow make_row(uint64_t x, u128 empirical, double c) {
  TheoremCheckRow row;
  row.x = x;
  row.empirical = empirical;
  double lx = std::log(double(x));
  double x2 = double(x) * double(x);
  row.main_term = c * x2 / lx;
  double emp = u128_to_double(empirical);
  row.ratio = emp / row.main_term;
  row.signed_residual = (emp - row.main_term) * lx * lx / x2;
  row.implied_constant = std::abs(row.signed_residual);
  return row;
}

std::vector<TheoremCheckRow> rows_for(const RunReport& report, double c,
                                      const std::function<u128(const Checkpoint&)>& pick) {
  std::vector<TheoremCheckRow> rows;
  for (const auto& cp : report.checkpoints)
    if (cp.x >= 3) rows.push_back(make_row(cp.x, pick(cp), c));
  return rows;
}

}  // namespace

std::vector<TheoremCheckRow> theorem3_table(const RunReport& report, double c) {
  if (c <= 0) throw std::invalid_argument("theorem3_table: c must be positive");
  return rows_for(report, c, [](const Checkpoint& cp) { return cp.sum_f; });
}

std::vector<TheoremCheckRow> theorem4_table(const RunReport& report, int k,
                                            double c) {
  if (c <= 0) throw std::invalid_argument("theorem4_table: c must be positive");
  std::size_t ki = k_index(report, k);
  return rows_for(report, c,
                  [ki](const Checkpoint& cp) { return cp.sum_f_kfree[ki]; });
}

std::vector<TheoremCheckRow> eq1_table(const RunReport& report) {
  double c = coefficients({}).alladi_erdos;
  return rows_for(report, c, [](const Checkpoint& cp) { return cp.sum_P; });
}

std::vector<Eq2Row> eq2_check(const RunReport& report, int k) {
  std::size_t ki = k_index(report, k);
  double zk = zeta(double(k));
  std::vector<Eq2Row> rows;
  for (const auto& cp : report.checkpoints) {
    Eq2Row row;
    row.x = cp.x;
    row.count = cp.count_kfree[ki];
    row.expected = double(cp.x) / zk;
    row.error_scaled = std::abs(u128_to_double(row.count) - row.expected) /
                       std::pow(double(cp.x), 1.0 / k);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Eq5Row> eq5_table(const RunReport& report) {
  std::vector<Eq5Row> rows;
  for (const auto& cp : report.checkpoints) {
    if (cp.x < 2) continue;
    Eq5Row row;
    row.x = cp.x;
    row.sum_f_hard = cp.sum_f_hard;
    row.bound = std::pow(double(cp.x), 1.5) * std::log(double(cp.x));
    row.ratio = u128_to_double(cp.sum_f_hard) / row.bound;
    rows.push_back(row);
  }
  return rows;
}

Lemma2Result lemma2_check(double x, int k) {
  if (x < 10) throw std::invalid_argument("lemma2_check: x must be >= 10");
  if (k < 2 || k > 10) throw std::invalid_argument("lemma2_check: k must be in [2, 10]");

  auto root = uint64_t(std::sqrt(x));
  while (double(root + 1) * double(root + 1) <= x) ++root;
  while (root > 1 && double(root) * double(root) > x) --root;

  PrimeTable table = sieve_primes(isqrt64(root));
  KfreeBlock flags = kfree_flags(1, root + 1, k, table);

  long double lhs = 0.0L;  // descending n: small terms first
  for (uint64_t n = root; n >= 1; --n)
    if (flags.flag(std::size_t(n - 1)))
      lhs += 1.0L / ((long double)n * n * std::log((long double)x / n));

  Lemma2Result res;
  res.x = x;
  res.k = k;
  res.lhs = double(lhs);
  res.rhs = zeta(2.0) / zeta(2.0 * k) / std::log(x);
  res.scaled_diff = std::abs(res.lhs - res.rhs) * std::log(x) * std::log(x);
  return res;
}

Eq12Result eq12_check(int k, uint64_t n) {
  if (k < 2 || k > 10) throw std::invalid_argument("eq12_check: k must be in [2, 10]");
  if (n < 1) throw std::invalid_argument("eq12_check: n must be >= 1");

  PrimeTable table = sieve_primes(isqrt64(n));
  constexpr uint64_t kChunk = uint64_t(1) << 20;
  long double partial = 0.0L;
  KfreeBlock flags;
  for (uint64_t lo = 1; lo <= n; lo += kChunk) {
    uint64_t hi = std::min(n + 1, lo + kChunk);
    kfree_into(lo, hi, k, table, flags);
    for (uint64_t v = hi - 1; v >= lo; --v) {  // descending within the chunk
      if (flags.flag(std::size_t(v - lo)))
        partial += 1.0L / ((long double)v * v);
      if (v == lo) break;
    }
  }

  Eq12Result res;
  res.k = k;
  res.n = n;
  res.partial = double(partial);
  res.target = zeta(2.0) / zeta(2.0 * k);
  res.diff = std::abs(res.partial - res.target);
  res.tail_bound = 1.0 / double(n);
  return res;
}

std::string TargetSum::label() const {
  switch (kind) {
    case Kind::sum_f: return "sum_f";
    case Kind::sum_P: return "sum_P";
    case Kind::sum_f_hard: return "sum_f_hard";
    case Kind::sum_f_kfree: return "sum_f_kfree_" + std::to_string(k);
  }
  return "?";
}

DiscriminationReport discriminate(const RunReport& report, TargetSum target,
                                  const std::vector<Candidate>& candidates) {
  if (candidates.size() < 2)
    throw std::invalid_argument("discriminate: need at least two candidates");

  std::function<u128(const Checkpoint&)> pick;
  switch (target.kind) {
    case TargetSum::Kind::sum_f:
      pick = [](const Checkpoint& cp) { return cp.sum_f; };
      break;
    case TargetSum::Kind::sum_P:
      pick = [](const Checkpoint& cp) { return cp.sum_P; };
      break;
    case TargetSum::Kind::sum_f_hard:
      pick = [](const Checkpoint& cp) { return cp.sum_f_hard; };
      break;
    case TargetSum::Kind::sum_f_kfree: {
      std::size_t ki = k_index(report, target.k);
      pick = [ki](const Checkpoint& cp) { return cp.sum_f_kfree[ki]; };
      break;
    }
  }

  DiscriminationReport rep;
  rep.target = target;
  for (const auto& cp : report.checkpoints)
    if (cp.x >= 3) rep.xs.push_back(cp.x);
  if (rep.xs.size() < 2 || rep.xs.back() < 100 * rep.xs.front())
    throw std::invalid_argument("discriminate: grid must span at least two decades");

  for (const auto& cand : candidates) {
    DiscriminationReport::Track track;
    track.label = cand.label;
    track.c = cand.c;
    for (const auto& cp : report.checkpoints) {
      if (cp.x < 3) continue;
      TheoremCheckRow row = make_row(cp.x, pick(cp), cand.c);
      track.abs_ratio_err.push_back(std::abs(row.ratio - 1.0));
    }
    rep.tracks.push_back(std::move(track));
  }

  // Verdict: smallest |ratio - 1| at the largest grid point; exact ties go to
  // the candidate whose error shrank the most across the grid.
  std::size_t best = 0;
  for (std::size_t i = 1; i < rep.tracks.size(); ++i) {
    double ei = rep.tracks[i].abs_ratio_err.back();
    double eb = rep.tracks[best].abs_ratio_err.back();
    if (ei < eb) {
      best = i;
    } else if (ei == eb) {
      double ti = rep.tracks[i].abs_ratio_err.back() /
                  rep.tracks[i].abs_ratio_err.front();
      double tb = rep.tracks[best].abs_ratio_err.back() /
                  rep.tracks[best].abs_ratio_err.front();
      if (ti < tb) best = i;
    }
  }
  rep.verdict = rep.tracks[best].label;
  return rep;
}

std::vector<MomentFitRow> moment_fit(const RunReport& report, int r) {
  const auto& orders = report.config.moment_orders;
  auto it = std::find(orders.begin(), orders.end(), r);
  if (it == orders.end())
    throw std::invalid_argument("moment_fit: r = " + std::to_string(r) +
                                " not present in the report");
  std::size_t ri = std::size_t(it - orders.begin());

  std::vector<MomentFitRow> rows;
  for (const auto& cp : report.checkpoints) {
    if (cp.x < 3) continue;
    MomentFitRow row;
    row.x = cp.x;
    row.moment = cp.sum_f_pow[ri];
    double lx = std::log(double(cp.x));
    row.estimate = row.moment.to_double() * std::pow(lx, r) /
                   std::pow(double(cp.x), r + 1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kempner

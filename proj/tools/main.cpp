// kempner: compute f(n) (smallest m with n | m!), run exact summations of
// f / P / k-free variants over [1, x_max], and emit asymptotic check tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "kempner/analysis.hpp"
#include "kempner/errors.hpp"
#include "kempner/kempner.hpp"
#include "kempner/report_io.hpp"
#include "kempner/summation.hpp"
#include "kempner/zeta.hpp"

using nlohmann::json;

namespace {

// Accepts plain integers and scientific shorthand (1e7, 2.5e6).
uint64_t parse_count(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("");
    if (s.find_first_not_of("0123456789") == std::string::npos) {
      return std::stoull(s);
    }
    std::size_t pos = 0;
    long double v = std::stold(s, &pos);
    if (pos != s.size() || v < 0 || v > 1.8e18L || v != std::floor(v))
      throw std::invalid_argument("");
    return uint64_t(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a nonnegative integer: '" + s + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range: '" + s + "'");
  }
}

std::vector<uint64_t> parse_count_list(const std::string& s) {
  std::vector<uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_count(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (uint64_t v : parse_count_list(s)) out.push_back(int(v));
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("KEMPNER_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid KEMPNER_WORKERS\n";
  }
  return 1;
}

struct OutputFile {
  std::FILE* fp = stdout;
  ~OutputFile() {
    if (fp && fp != stdout) std::fclose(fp);
  }
  void open(const std::string& path) {
    if (path.empty()) return;
    fp = std::fopen(path.c_str(), "w");
    if (!fp) throw std::invalid_argument("cannot open output file: " + path);
  }
  void line(const std::string& s) {
    std::fputs(s.c_str(), fp);
    std::fputc('\n', fp);
  }
  void flush() { std::fflush(fp); }
};

// --------------------------------------------------------------------------
// f <n>
// --------------------------------------------------------------------------

int cmd_f(uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto table = kempner::sieve_primes(kempner::isqrt64(n));
  auto block = kempner::factorize_block(n, n + 1, table);
  auto fac = block.factorization(0);
  uint64_t P = kempner::largest_prime_factor(fac);
  std::optional<uint64_t> fast;
  if (n >= 2) fast = kempner::lemma1_fast_path(n, P);
  uint64_t f = fast ? *fast : kempner::kempner(fac);

  std::string facstr;
  if (fac.factors.empty()) {
    facstr = "1";
  } else {
    for (const auto& [p, a] : fac.factors) {
      if (!facstr.empty()) facstr += "*";
      facstr += std::to_string(p);
      if (a > 1) facstr += "^" + std::to_string(a);
    }
  }
  std::printf("n=%llu f=%llu P=%llu fast_path=%s factorization=%s\n",
              (unsigned long long)n, (unsigned long long)f,
              (unsigned long long)P, fast ? "true" : "false", facstr.c_str());
  return 0;
}

// --------------------------------------------------------------------------
// sum
// --------------------------------------------------------------------------

struct SumArgs {
  std::string xmax;
  std::string grid;
  std::string ks = "2,3";
  std::string moments = "2";
  std::string block_size;
  int workers = 0;
  std::string format = "csv";
  std::string output;
};

kempner::SumConfig make_config(const SumArgs& a) {
  kempner::SumConfig cfg;
  cfg.x_max = parse_count(a.xmax);
  if (!a.grid.empty()) cfg.grid = parse_count_list(a.grid);
  cfg.ks = parse_int_list(a.ks);
  cfg.moment_orders = parse_int_list(a.moments);
  if (!a.block_size.empty()) cfg.block_size = parse_count(a.block_size);
  cfg.workers = a.workers > 0 ? a.workers : default_workers();
  return cfg;
}

int cmd_sum(const SumArgs& args) {
  auto cfg = make_config(args).normalized();
  cfg.validate();
  kempner::check_run_capacity(cfg);  // refuse before any output
  OutputFile out;
  out.open(args.output);

  kempner::RunReport report;
  if (args.format == "csv") {
    out.line(kempner::checkpoint_csv_header(cfg));
    out.flush();
    report = kempner::run_sums(cfg, [&](const kempner::Checkpoint& cp) {
      out.line(kempner::checkpoint_csv_row(cp));
      out.flush();  // crash tolerance: rows land as soon as they are final
    });
  } else if (args.format == "json") {
    report = kempner::run_sums(cfg);
    out.line(kempner::report_to_json(report).dump(2));
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
  std::fprintf(stderr, "# summary: x_max=%llu checkpoints=%zu workers=%d wall_s=%.3f\n",
               (unsigned long long)cfg.x_max, report.checkpoints.size(),
               cfg.workers, report.wall_seconds);
  return 0;
}

// --------------------------------------------------------------------------
// verify <target>
// --------------------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  std::string xmax = "1e7";
  std::string grid;
  int k = 0;
  std::string n = "1e6";
  std::string xs = "1e4,1e6,1e8";
  int r = 2;
  std::string input;
  int workers = 0;
  std::string block_size;
  std::string format = "csv";
  std::string output;
};

kempner::RunReport verify_report(const VerifyArgs& args,
                                 const std::vector<int>& need_ks, int need_r) {
  if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) throw std::invalid_argument("cannot read report: " + args.input);
    json j = json::parse(in);
    return kempner::report_from_json(j);
  }
  SumArgs sum_args;
  sum_args.xmax = args.xmax;
  sum_args.grid = args.grid;
  sum_args.workers = args.workers;
  sum_args.block_size = args.block_size;
  auto cfg = make_config(sum_args);
  for (int k : need_ks)
    if (std::find(cfg.ks.begin(), cfg.ks.end(), k) == cfg.ks.end()) {
      cfg.ks.push_back(k);
      std::sort(cfg.ks.begin(), cfg.ks.end());
    }
  if (need_r && std::find(cfg.moment_orders.begin(), cfg.moment_orders.end(),
                          need_r) == cfg.moment_orders.end()) {
    cfg.moment_orders.push_back(need_r);
    std::sort(cfg.moment_orders.begin(), cfg.moment_orders.end());
  }
  std::fprintf(stderr, "# running sums to x_max=%llu (use --input to reuse a stored report)\n",
               (unsigned long long)cfg.x_max);
  return kempner::run_sums(cfg.normalized());
}

// Single {config, checkpoints, tables} object; tables keyed by verify target.
json verify_doc(const kempner::RunReport& report, const std::string& target,
                json table) {
  json doc;
  doc["config"] = kempner::config_to_json(report.config);
  json cps = json::array();
  for (const auto& cp : report.checkpoints)
    cps.push_back(kempner::checkpoint_to_json(cp));
  doc["checkpoints"] = std::move(cps);
  doc["tables"] = json{{target, std::move(table)}};
  return doc;
}

void emit_candidate_tables(
    OutputFile& out, const std::string& format, const std::string& target,
    const kempner::RunReport& report,
    const std::vector<std::pair<std::string, double>>& candidates,
    const std::function<std::vector<kempner::TheoremCheckRow>(double)>& table_for,
    const kempner::DiscriminationReport& disc) {
  if (format == "json") {
    json tables;
    json cands = json::array();
    for (const auto& [label, c] : candidates) {
      json rows = json::array();
      for (const auto& row : table_for(c))
        rows.push_back(kempner::theorem_row_to_json(row));
      cands.push_back(json{{"label", label}, {"c", c}, {"rows", std::move(rows)}});
    }
    tables["candidates"] = std::move(cands);
    tables["discrimination"] = kempner::discrimination_to_json(disc);
    out.line(verify_doc(report, target, std::move(tables)).dump(2));
    return;
  }
  out.line(kempner::theorem_rows_csv_header(true));
  for (const auto& [label, c] : candidates)
    for (const auto& row : table_for(c))
      out.line(kempner::theorem_row_csv(row, label, c, true));
  out.line("# verdict: " + disc.verdict);
}

int cmd_verify(const VerifyArgs& args) {
  OutputFile out;
  out.open(args.output);
  const std::string& t = args.target;

  if (t == "theorem3") {
    auto report = verify_report(args, {}, 0);
    auto coeff = kempner::coefficients({});
    std::vector<std::pair<std::string, double>> cands{
        {"zeta2_stated", coeff.thm3_stated},
        {"zeta2_half_consistent", coeff.thm3_consistent}};
    auto disc = kempner::discriminate(report, kempner::TargetSum::f(),
                                      {{cands[0].first, cands[0].second},
                                       {cands[1].first, cands[1].second}});
    emit_candidate_tables(out, args.format, "theorem3", report, cands,
                          [&](double c) { return kempner::theorem3_table(report, c); },
                          disc);
  } else if (t == "theorem4") {
    if (args.k == 0) throw std::invalid_argument("verify theorem4 requires --k");
    auto report = verify_report(args, {args.k}, 0);
    auto coeff = kempner::coefficients({args.k});
    std::vector<std::pair<std::string, double>> cands{
        {"stated", coeff.thm4_stated_at(args.k)},
        {"consistent", coeff.thm4_consistent_at(args.k)}};
    auto disc = kempner::discriminate(report, kempner::TargetSum::f_kfree(args.k),
                                      {{cands[0].first, cands[0].second},
                                       {cands[1].first, cands[1].second}});
    emit_candidate_tables(
        out, args.format, "theorem4", report, cands,
        [&](double c) { return kempner::theorem4_table(report, args.k, c); }, disc);
  } else if (t == "eq1") {
    auto report = verify_report(args, {}, 0);
    auto rows = kempner::eq1_table(report);
    if (args.format == "json") {
      json jrows = json::array();
      for (const auto& row : rows) jrows.push_back(kempner::theorem_row_to_json(row));
      out.line(verify_doc(report, "eq1", std::move(jrows)).dump(2));
    } else {
      out.line(kempner::theorem_rows_csv_header(false));
      for (const auto& row : rows) out.line(kempner::theorem_row_csv(row));
    }
  } else if (t == "eq2") {
    if (args.k == 0) throw std::invalid_argument("verify eq2 requires --k");
    auto report = verify_report(args, {args.k}, 0);
    auto rows = kempner::eq2_check(report, args.k);
    if (args.format == "json") {
      json jrows = json::array();
      for (const auto& row : rows)
        jrows.push_back(json{{"x", row.x},
                             {"count", kempner::u128_to_string(row.count)},
                             {"expected", row.expected},
                             {"error_scaled", row.error_scaled}});
      out.line(verify_doc(report, "eq2", std::move(jrows)).dump(2));
    } else {
      out.line("x,count,expected,error_scaled");
      for (const auto& row : rows)
        out.line(std::to_string(row.x) + "," + kempner::u128_to_string(row.count) +
                 "," + kempner::format_real(row.expected) + "," +
                 kempner::format_real(row.error_scaled));
    }
  } else if (t == "eq5") {
    auto report = verify_report(args, {}, 0);
    auto rows = kempner::eq5_table(report);
    if (args.format == "json") {
      json jrows = json::array();
      for (const auto& row : rows)
        jrows.push_back(json{{"x", row.x},
                             {"sum_f_hard", kempner::u128_to_string(row.sum_f_hard)},
                             {"bound", row.bound},
                             {"ratio", row.ratio}});
      out.line(verify_doc(report, "eq5", std::move(jrows)).dump(2));
    } else {
      out.line("x,sum_f_hard,bound,ratio");
      for (const auto& row : rows)
        out.line(std::to_string(row.x) + "," +
                 kempner::u128_to_string(row.sum_f_hard) + "," +
                 kempner::format_real(row.bound) + "," +
                 kempner::format_real(row.ratio));
    }
  } else if (t == "eq12") {
    int k = args.k == 0 ? 2 : args.k;
    auto res = kempner::eq12_check(k, parse_count(args.n));
    if (args.format == "json") {
      json doc;
      doc["config"] = json{{"k", res.k}, {"n", res.n}};
      doc["checkpoints"] = json::array();
      doc["tables"] = json{{"eq12", json{{"k", res.k},
                                         {"n", res.n},
                                         {"partial", res.partial},
                                         {"target", res.target},
                                         {"diff", res.diff},
                                         {"tail_bound", res.tail_bound}}}};
      out.line(doc.dump(2));
    } else {
      out.line("k,n,partial,target,diff,tail_bound");
      out.line(std::to_string(res.k) + "," + std::to_string(res.n) + "," +
               kempner::format_real(res.partial) + "," +
               kempner::format_real(res.target) + "," +
               kempner::format_real(res.diff) + "," +
               kempner::format_real(res.tail_bound));
    }
  } else if (t == "lemma2") {
    int k = args.k == 0 ? 2 : args.k;
    auto xs = parse_count_list(args.xs);
    json jrows = json::array();
    if (args.format != "json") out.line("x,k,lhs,rhs,scaled_diff");
    for (uint64_t x : xs) {
      auto res = kempner::lemma2_check(double(x), k);
      if (args.format == "json") {
        jrows.push_back(json{{"x", res.x},
                             {"k", res.k},
                             {"lhs", res.lhs},
                             {"rhs", res.rhs},
                             {"scaled_diff", res.scaled_diff}});
      } else {
        out.line(kempner::format_real(res.x) + "," + std::to_string(res.k) + "," +
                 kempner::format_real(res.lhs) + "," +
                 kempner::format_real(res.rhs) + "," +
                 kempner::format_real(res.scaled_diff));
      }
    }
    if (args.format == "json") {
      json doc;
      doc["config"] = json{{"k", k}, {"xs", xs}};
      doc["checkpoints"] = json::array();
      doc["tables"] = json{{"lemma2", std::move(jrows)}};
      out.line(doc.dump(2));
    }
  } else if (t == "moments") {
    auto report = verify_report(args, {}, args.r);
    auto rows = kempner::moment_fit(report, args.r);
    if (args.format == "json") {
      json jrows = json::array();
      for (const auto& row : rows)
        jrows.push_back(json{{"x", row.x},
                             {"moment", row.moment.to_string()},
                             {"estimate", row.estimate}});
      out.line(verify_doc(report, "moments", std::move(jrows)).dump(2));
    } else {
      out.line("r,x,moment,estimate");
      for (const auto& row : rows)
        out.line(std::to_string(args.r) + "," + std::to_string(row.x) + "," +
                 row.moment.to_string() + "," + kempner::format_real(row.estimate));
    }
  } else {
    throw std::invalid_argument("unknown verify target: " + t);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorial-divisibility engine: f(n), exact sums, asymptotic checks"};
  app.set_version_flag("--version", KEMPNER_VERSION);
  app.require_subcommand(1);

  std::string f_arg;
  auto* sub_f = app.add_subcommand("f", "compute f(n), P(n) and the factorization");
  sub_f->add_option("n", f_arg, "integer >= 1")->required();

  SumArgs sum_args;
  auto* sub_sum = app.add_subcommand("sum", "stream exact checkpoint sums over [1, x_max]");
  sub_sum->add_option("--xmax", sum_args.xmax, "upper summation bound")->required();
  sub_sum->add_option("--grid", sum_args.grid, "comma-separated checkpoint x values");
  sub_sum->add_option("--ks", sum_args.ks, "k-free variants (default 2,3)");
  sub_sum->add_option("--moments", sum_args.moments, "moment orders (default 2)");
  sub_sum->add_option("--block-size", sum_args.block_size, "sieve block size");
  sub_sum->add_option("--workers", sum_args.workers, "worker threads (default $KEMPNER_WORKERS or 1)");
  sub_sum->add_option("--format", sum_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sub_sum->add_option("--output", sum_args.output, "output path (default stdout)");

  VerifyArgs v_args;
  auto* sub_verify = app.add_subcommand("verify", "emit an asymptotic check table");
  sub_verify->add_option("target", v_args.target, "theorem3 | theorem4 | eq1 | eq2 | eq5 | eq12 | lemma2 | moments")
      ->required()
      ->check(CLI::IsMember({"theorem3", "theorem4", "eq1", "eq2", "eq5", "eq12",
                             "lemma2", "moments"}));
  sub_verify->add_option("--xmax", v_args.xmax, "x_max for the underlying run (default 1e7)");
  sub_verify->add_option("--grid", v_args.grid, "checkpoint grid override");
  sub_verify->add_option("--k", v_args.k, "k for theorem4 / eq2 / eq12 / lemma2");
  sub_verify->add_option("--n", v_args.n, "partial-sum length for eq12 (default 1e6)");
  sub_verify->add_option("--x", v_args.xs, "x list for lemma2 (default 1e4,1e6,1e8)");
  sub_verify->add_option("--r", v_args.r, "moment order for moments (default 2)");
  sub_verify->add_option("--input", v_args.input, "reuse a stored JSON report instead of running");
  sub_verify->add_option("--workers", v_args.workers, "worker threads");
  sub_verify->add_option("--block-size", v_args.block_size, "sieve block size");
  sub_verify->add_option("--format", v_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sub_verify->add_option("--output", v_args.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (sub_f->parsed()) return cmd_f(parse_count(f_arg));
    if (sub_sum->parsed()) return cmd_sum(sum_args);
    if (sub_verify->parsed()) return cmd_verify(v_args);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const kempner::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

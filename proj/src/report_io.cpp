#include "kempner/report_io.hpp"

#include <cstdio>

namespace kempner {

namespace {

using nlohmann::json;

std::string exact(u128 v) { return u128_to_string(v); }

u128 parse_u128(const json& j) {
  if (j.is_string()) return u128_from_string(j.get<std::string>());
  return u128(j.get<uint64_t>());
}

BigUint parse_big(const json& j) {
  if (j.is_string()) return BigUint::from_string(j.get<std::string>());
  return BigUint(u128(j.get<uint64_t>()));
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string checkpoint_csv_header(const SumConfig& config) {
  std::string h = "x,sum_f,sum_P,sum_f_hard";
  for (int k : config.ks) h += ",count_kfree_" + std::to_string(k);
  for (int k : config.ks) h += ",sum_f_kfree_" + std::to_string(k);
  for (int r : config.moment_orders) h += ",sum_f_pow_" + std::to_string(r);
  return h;
}

std::string checkpoint_csv_row(const Checkpoint& cp) {
  std::string row = std::to_string(cp.x);
  row += "," + exact(cp.sum_f);
  row += "," + exact(cp.sum_P);
  row += "," + exact(cp.sum_f_hard);
  for (const auto& v : cp.count_kfree) row += "," + exact(v);
  for (const auto& v : cp.sum_f_kfree) row += "," + exact(v);
  for (const auto& v : cp.sum_f_pow) row += "," + v.to_string();
  return row;
}

std::string report_csv(const RunReport& report) {
  std::string out = checkpoint_csv_header(report.config) + "\n";
  for (const auto& cp : report.checkpoints) out += checkpoint_csv_row(cp) + "\n";
  return out;
}

json config_to_json(const SumConfig& config) {
  return json{{"x_max", config.x_max},
              {"grid", config.grid},
              {"ks", config.ks},
              {"moment_orders", config.moment_orders},
              {"block_size", config.block_size},
              {"workers", config.workers}};
}

SumConfig config_from_json(const json& j) {
  SumConfig c;
  c.x_max = j.at("x_max").get<uint64_t>();
  c.grid = j.at("grid").get<std::vector<uint64_t>>();
  c.ks = j.at("ks").get<std::vector<int>>();
  c.moment_orders = j.at("moment_orders").get<std::vector<int>>();
  c.block_size = j.at("block_size").get<uint64_t>();
  c.workers = j.at("workers").get<int>();
  return c;
}

json checkpoint_to_json(const Checkpoint& cp) {
  json j;
  j["x"] = cp.x;
  j["sum_f"] = exact(cp.sum_f);
  j["sum_P"] = exact(cp.sum_P);
  j["sum_f_hard"] = exact(cp.sum_f_hard);
  json counts = json::array(), sums = json::array(), pows = json::array();
  for (const auto& v : cp.count_kfree) counts.push_back(exact(v));
  for (const auto& v : cp.sum_f_kfree) sums.push_back(exact(v));
  for (const auto& v : cp.sum_f_pow) pows.push_back(v.to_string());
  j["count_kfree"] = std::move(counts);
  j["sum_f_kfree"] = std::move(sums);
  j["sum_f_pow"] = std::move(pows);
  return j;
}

Checkpoint checkpoint_from_json(const json& j) {
  Checkpoint cp;
  cp.x = j.at("x").get<uint64_t>();
  cp.sum_f = parse_u128(j.at("sum_f"));
  cp.sum_P = parse_u128(j.at("sum_P"));
  cp.sum_f_hard = parse_u128(j.at("sum_f_hard"));
  for (const auto& v : j.at("count_kfree")) cp.count_kfree.push_back(parse_u128(v));
  for (const auto& v : j.at("sum_f_kfree")) cp.sum_f_kfree.push_back(parse_u128(v));
  for (const auto& v : j.at("sum_f_pow")) cp.sum_f_pow.push_back(parse_big(v));
  return cp;
}

json report_to_json(const RunReport& report) {
  json j;
  j["config"] = config_to_json(report.config);
  json cps = json::array();
  for (const auto& cp : report.checkpoints) cps.push_back(checkpoint_to_json(cp));
  j["checkpoints"] = std::move(cps);
  j["wall_seconds"] = report.wall_seconds;
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.config = config_from_json(j.at("config"));
  for (const auto& cp : j.at("checkpoints"))
    r.checkpoints.push_back(checkpoint_from_json(cp));
  r.wall_seconds = j.value("wall_seconds", 0.0);
  return r;
}

std::string theorem_rows_csv_header(bool with_candidate) {
  std::string h = "x,empirical,main_term,ratio,implied_constant,signed_residual";
  return with_candidate ? "candidate,c," + h : h;
}

std::string theorem_row_csv(const TheoremCheckRow& row, const std::string& label,
                            double c, bool with_candidate) {
  std::string s;
  if (with_candidate) s = label + "," + format_real(c) + ",";
  s += std::to_string(row.x);
  s += "," + exact(row.empirical);
  s += "," + format_real(row.main_term);
  s += "," + format_real(row.ratio);
  s += "," + format_real(row.implied_constant);
  s += "," + format_real(row.signed_residual);
  return s;
}

json theorem_row_to_json(const TheoremCheckRow& row) {
  return json{{"x", row.x},
              {"empirical", exact(row.empirical)},
              {"main_term", row.main_term},
              {"ratio", row.ratio},
              {"implied_constant", row.implied_constant},
              {"signed_residual", row.signed_residual}};
}

json discrimination_to_json(const DiscriminationReport& rep) {
  json tracks = json::array();
  for (const auto& t : rep.tracks)
    tracks.push_back(json{{"label", t.label},
                          {"c", t.c},
                          {"abs_ratio_err", t.abs_ratio_err}});
  return json{{"target", rep.target.label()},
              {"xs", rep.xs},
              {"candidates", std::move(tracks)},
              {"verdict", rep.verdict}};
}

}  // namespace kempner

#ifndef KEMPNER_REPORT_IO_HPP
#define KEMPNER_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "kempner/analysis.hpp"
#include "kempner/summation.hpp"

namespace kempner {

// Reals are rendered with 12 significant digits; exact integers in full
// decimal, never scientific notation.
std::string format_real(double v);

// Stable checkpoint CSV schema:
//   x,sum_f,sum_P,sum_f_hard,count_kfree_<k>...,sum_f_kfree_<k>...,sum_f_pow_<r>...
std::string checkpoint_csv_header(const SumConfig& config);
std::string checkpoint_csv_row(const Checkpoint& cp);

// Whole report rendered as CSV (header + one row per checkpoint).
std::string report_csv(const RunReport& report);

// JSON: exact integer fields are decimal strings so nothing is ever rounded;
// report_from_json accepts plain numbers too.
nlohmann::json config_to_json(const SumConfig& config);
SumConfig config_from_json(const nlohmann::json& j);
nlohmann::json checkpoint_to_json(const Checkpoint& cp);
Checkpoint checkpoint_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

// Analysis tables.
std::string theorem_rows_csv_header(bool with_candidate);
std::string theorem_row_csv(const TheoremCheckRow& row,
                            const std::string& label = "", double c = 0,
                            bool with_candidate = false);
nlohmann::json theorem_row_to_json(const TheoremCheckRow& row);
nlohmann::json discrimination_to_json(const DiscriminationReport& rep);

}  // namespace kempner

#endif  // KEMPNER_REPORT_IO_HPP

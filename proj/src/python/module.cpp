// Python bindings for the factorial-divisibility engine.  Exact integer
// results cross the boundary as arbitrary-precision Python ints (built from
// their decimal rendering), so nothing is ever truncated.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kempner/analysis.hpp"
#include "kempner/errors.hpp"
#include "kempner/kempner.hpp"
#include "kempner/report_io.hpp"
#include "kempner/summation.hpp"
#include "kempner/zeta.hpp"

namespace py = pybind11;
using namespace kempner;

namespace {

py::int_ py_int(const std::string& decimal) {
  PyObject* o = PyLong_FromString(decimal.c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

py::int_ py_int(u128 v) { return py_int(u128_to_string(v)); }
py::int_ py_int(const BigUint& v) { return py_int(v.to_string()); }

Factorization factorize_one(uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto table = sieve_primes(isqrt64(n));
  return factorize_block(n, n + 1, table).factorization(0);
}

py::dict checkpoint_dict(const SumConfig& cfg, const Checkpoint& cp) {
  py::dict d;
  d["x"] = cp.x;
  d["sum_f"] = py_int(cp.sum_f);
  d["sum_P"] = py_int(cp.sum_P);
  d["sum_f_hard"] = py_int(cp.sum_f_hard);
  py::dict counts, sums, pows;
  for (std::size_t i = 0; i < cfg.ks.size(); ++i) {
    counts[py::int_(cfg.ks[i])] = py_int(cp.count_kfree[i]);
    sums[py::int_(cfg.ks[i])] = py_int(cp.sum_f_kfree[i]);
  }
  for (std::size_t i = 0; i < cfg.moment_orders.size(); ++i)
    pows[py::int_(cfg.moment_orders[i])] = py_int(cp.sum_f_pow[i]);
  d["count_kfree"] = counts;
  d["sum_f_kfree"] = sums;
  d["sum_f_pow"] = pows;
  return d;
}

py::dict row_dict(const TheoremCheckRow& row) {
  py::dict d;
  d["x"] = row.x;
  d["empirical"] = py_int(row.empirical);
  d["main_term"] = row.main_term;
  d["ratio"] = row.ratio;
  d["implied_constant"] = row.implied_constant;
  d["signed_residual"] = row.signed_residual;
  return d;
}

TargetSum target_from(const std::string& name, int k) {
  if (name == "sum_f") return TargetSum::f();
  if (name == "sum_P") return TargetSum::P();
  if (name == "sum_f_hard") return TargetSum::f_hard();
  if (name == "sum_f_kfree") return TargetSum::f_kfree(k);
  throw std::invalid_argument("unknown target: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "factorial-divisibility engine: f(n) = min{m : n | m!}, exact "
            "summations and asymptotic check tables";

  py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

  // point computations
  m.def("f", [](uint64_t n) { return kempner::kempner(factorize_one(n)); },
        py::arg("n"), "f(n): smallest m with n | m!");
  m.def("f_bruteforce", &kempner_bruteforce, py::arg("n"),
        py::arg("bound") = kOracleBound,
        "independent linear-scan oracle for f(n)");
  m.def("largest_prime_factor",
        [](uint64_t n) { return largest_prime_factor(factorize_one(n)); },
        py::arg("n"), "P(n), with P(1) = 1");
  m.def("factorize",
        [](uint64_t n) {
          std::vector<std::pair<uint64_t, uint32_t>> out;
          for (const auto& [p, a] : factorize_one(n).factors) out.emplace_back(p, a);
          return out;
        },
        py::arg("n"), "list of (prime, exponent), ascending");
  m.def("f_details",
        [](uint64_t n) {
          auto fac = factorize_one(n);
          uint64_t P = largest_prime_factor(fac);
          bool fast = n >= 2 && lemma1_fast_path(n, P).has_value();
          py::dict d;
          d["n"] = n;
          d["f"] = kempner::kempner(fac);
          d["P"] = P;
          d["fast_path"] = fast;
          std::vector<std::pair<uint64_t, uint32_t>> fs;
          for (const auto& [p, a] : fac.factors) fs.emplace_back(p, a);
          d["factorization"] = fs;
          return d;
        },
        py::arg("n"));
  m.def("legendre_valuation", &legendre_valuation, py::arg("p"), py::arg("m"),
        "exponent of prime p in m!");
  m.def("kempner_prime_power",
        [](uint64_t p, uint32_t a) { return kempner_prime_power(p, a); },
        py::arg("p"), py::arg("a"), "smallest m with p^a | m!");
  m.def("sieve_primes",
        [](uint64_t limit) { return sieve_primes(limit).primes; },
        py::arg("limit"), "all primes <= limit");
  m.def("kfree_flags",
        [](uint64_t lo, uint64_t hi, int k) {
          auto table = sieve_primes(hi > lo ? isqrt64(hi - 1) : 0);
          auto blk = kfree_flags(lo, hi, k, table);
          std::vector<bool> out(blk.size());
          for (std::size_t i = 0; i < blk.size(); ++i) out[i] = blk.flag(i);
          return out;
        },
        py::arg("lo"), py::arg("hi"), py::arg("k"),
        "k-free flags for [lo, hi)");

  // constants
  m.def("zeta", &zeta, py::arg("s"), py::arg("eps") = 1e-12);
  m.def("coefficients",
        [](const std::vector<int>& ks) {
          auto c = coefficients(ks);
          py::dict d;
          d["zeta2"] = c.zeta2;
          d["thm3_stated"] = c.thm3_stated;
          d["thm3_consistent"] = c.thm3_consistent;
          d["alladi_erdos"] = c.alladi_erdos;
          d["zeta_2k"] = c.zeta_2k;
          d["thm4_stated"] = c.thm4_stated;
          d["thm4_consistent"] = c.thm4_consistent;
          d["kfree_density"] = c.kfree_density;
          d["dirichlet_weight"] = c.dirichlet_weight;
          return d;
        },
        py::arg("ks") = std::vector<int>{2, 3});

  // summation runs
  py::class_<RunReport>(m, "RunReport")
      .def_property_readonly("wall_seconds",
                             [](const RunReport& r) { return r.wall_seconds; })
      .def_property_readonly("grid",
                             [](const RunReport& r) { return r.config.grid; })
      .def_property_readonly("checkpoints",
                             [](const RunReport& r) {
                               py::list out;
                               for (const auto& cp : r.checkpoints)
                                 out.append(checkpoint_dict(r.config, cp));
                               return out;
                             })
      .def("to_json",
           [](const RunReport& r) { return report_to_json(r).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return report_from_json(nlohmann::json::parse(text));
      })
      .def("csv", [](const RunReport& r) { return report_csv(r); });

  m.def("run_sums",
        [](uint64_t x_max, std::optional<std::vector<uint64_t>> grid,
           std::vector<int> ks, std::vector<int> moments, uint64_t block_size,
           int workers) {
          SumConfig cfg;
          cfg.x_max = x_max;
          if (grid) cfg.grid = *grid;
          cfg.ks = std::move(ks);
          cfg.moment_orders = std::move(moments);
          cfg.block_size = block_size;
          cfg.workers = workers;
          py::gil_scoped_release release;
          return run_sums(cfg);
        },
        py::arg("x_max"), py::arg("grid") = py::none(),
        py::arg("ks") = std::vector<int>{2, 3},
        py::arg("moments") = std::vector<int>{2},
        py::arg("block_size") = uint64_t(1) << 20, py::arg("workers") = 1,
        "exact checkpoint sums over [1, x_max]");

  m.def("sum_f_naive",
        [](uint64_t x) {
          SumConfig cfg;
          cfg.x_max = x;
          cfg.grid = {x};
          return checkpoint_dict(cfg, sum_f_naive(x));
        },
        py::arg("x"), "brute-force oracle checkpoint (x <= 1e6)");

  // analysis tables
  auto rows_out = [](const std::vector<TheoremCheckRow>& rows) {
    py::list out;
    for (const auto& row : rows) out.append(row_dict(row));
    return out;
  };
  m.def("theorem3_table",
        [rows_out](const RunReport& r, double c) { return rows_out(theorem3_table(r, c)); },
        py::arg("report"), py::arg("c"));
  m.def("theorem4_table",
        [rows_out](const RunReport& r, int k, double c) {
          return rows_out(theorem4_table(r, k, c));
        },
        py::arg("report"), py::arg("k"), py::arg("c"));
  m.def("eq1_table",
        [rows_out](const RunReport& r) { return rows_out(eq1_table(r)); },
        py::arg("report"));
  m.def("eq2_check",
        [](const RunReport& r, int k) {
          py::list out;
          for (const auto& row : eq2_check(r, k)) {
            py::dict d;
            d["x"] = row.x;
            d["count"] = py_int(row.count);
            d["expected"] = row.expected;
            d["error_scaled"] = row.error_scaled;
            out.append(d);
          }
          return out;
        },
        py::arg("report"), py::arg("k"));
  m.def("eq5_table",
        [](const RunReport& r) {
          py::list out;
          for (const auto& row : eq5_table(r)) {
            py::dict d;
            d["x"] = row.x;
            d["sum_f_hard"] = py_int(row.sum_f_hard);
            d["bound"] = row.bound;
            d["ratio"] = row.ratio;
            out.append(d);
          }
          return out;
        },
        py::arg("report"));
  m.def("lemma2_check",
        [](double x, int k) {
          auto res = lemma2_check(x, k);
          py::dict d;
          d["x"] = res.x;
          d["k"] = res.k;
          d["lhs"] = res.lhs;
          d["rhs"] = res.rhs;
          d["scaled_diff"] = res.scaled_diff;
          return d;
        },
        py::arg("x"), py::arg("k") = 2);
  m.def("eq12_check",
        [](int k, uint64_t n) {
          auto res = eq12_check(k, n);
          py::dict d;
          d["k"] = res.k;
          d["n"] = res.n;
          d["partial"] = res.partial;
          d["target"] = res.target;
          d["diff"] = res.diff;
          d["tail_bound"] = res.tail_bound;
          return d;
        },
        py::arg("k"), py::arg("n"));
  m.def("discriminate",
        [](const RunReport& r, const std::string& target,
           const std::vector<std::pair<std::string, double>>& candidates, int k) {
          std::vector<Candidate> cands;
          for (const auto& [label, c] : candidates) cands.push_back({label, c});
          auto rep = discriminate(r, target_from(target, k), cands);
          py::dict d;
          d["target"] = rep.target.label();
          d["xs"] = rep.xs;
          py::list tracks;
          for (const auto& t : rep.tracks) {
            py::dict td;
            td["label"] = t.label;
            td["c"] = t.c;
            td["abs_ratio_err"] = t.abs_ratio_err;
            tracks.append(td);
          }
          d["candidates"] = tracks;
          d["verdict"] = rep.verdict;
          return d;
        },
        py::arg("report"), py::arg("target"), py::arg("candidates"),
        py::arg("k") = 0);
  m.def("moment_fit",
        [](const RunReport& r, int order) {
          py::list out;
          for (const auto& row : moment_fit(r, order)) {
            py::dict d;
            d["x"] = row.x;
            d["moment"] = py_int(row.moment);
            d["estimate"] = row.estimate;
            out.append(d);
          }
          return out;
        },
        py::arg("report"), py::arg("r"));

#ifdef KEMPNER_VERSION
  m.attr("__version__") = KEMPNER_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>

#include "constaspec/codes.hpp"
#include "constaspec/consta.hpp"
#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"
#include "constaspec/report.hpp"
#include "constaspec/tables.hpp"

namespace py = pybind11;
using namespace constaspec;

namespace {

ConstaParams params_of(std::uint64_t n, std::optional<std::uint64_t> q,
                       std::optional<std::uint64_t> base, std::optional<std::uint64_t> order,
                       std::optional<std::uint64_t> lam) {
  if (order.has_value() == lam.has_value()) {
    throw Error(Errc::invalid_argument, "give exactly one of order and lam");
  }
  if (q.has_value() == base.has_value()) {
    throw Error(Errc::invalid_argument, "give exactly one of q (euclidean) and base (hermitian)");
  }
  if (lam && *lam > UINT32_MAX) throw Error(Errc::invalid_argument, "lam is not a field element");
  const LambdaSpec spec = order ? LambdaSpec{LambdaOrder{*order}}
                                : LambdaSpec{LambdaValue{static_cast<Field::Elem>(*lam)}};
  return base ? hermitian_params(*base, n, spec) : euclidean_params(*q, n, spec);
}

OracleBudget budget_of(std::optional<std::uint64_t> budget) {
  OracleBudget b = OracleBudget::from_env();
  if (budget) b.max_degree = *budget;
  return b;
}

Json poly_json(const Polynomial& f) {
  return {{"coeffs", coeffs_json(f)}, {"text", f.to_string()}};
}

std::string analyze(std::uint64_t n, std::optional<std::uint64_t> q, std::optional<std::uint64_t> base,
                    std::optional<std::uint64_t> order, std::optional<std::uint64_t> lam) {
  return to_json(count_factors(params_of(n, q, base, order, lam))).dump();
}

std::string factor(std::uint64_t n, std::optional<std::uint64_t> q, std::optional<std::uint64_t> base,
                   std::optional<std::uint64_t> order, std::optional<std::uint64_t> lam,
                   std::uint64_t seed, std::optional<std::uint64_t> budget) {
  const auto params = params_of(n, q, base, order, lam);
  const auto split = factor_split(params, params.mode, seed, budget_of(budget));
  Json out = {{"symmetric", Json::array()}, {"pairs", Json::array()}, {"unpaired", Json::array()}};
  for (const auto& f : split.symmetric) out["symmetric"].push_back(poly_json(f));
  for (const auto& p : split.pairs) out["pairs"].push_back({poly_json(p.factor), poly_json(p.mate)});
  for (const auto& f : split.unpaired) out["unpaired"].push_back(poly_json(f));
  return out.dump();
}

std::string count_lcd_str(std::uint64_t n, std::optional<std::uint64_t> q,
                          std::optional<std::uint64_t> base, std::optional<std::uint64_t> order,
                          std::optional<std::uint64_t> lam) {
  const auto params = params_of(n, q, base, order, lam);
  return count_lcd(params, params.mode).count.str();
}

std::string self_dual(std::uint64_t n, std::optional<std::uint64_t> q, std::optional<std::uint64_t> base,
                      std::optional<std::uint64_t> order, std::optional<std::uint64_t> lam) {
  const auto params = params_of(n, q, base, order, lam);
  const auto sd = self_dual_existence(params, params.mode);
  Json out = {{"exists", sd.exists},
              {"count", sd.count.str()},
              {"reason", sd.reason},
              {"consistent", sd.consistent},
              {"theorem_predicate", nullptr}};
  if (sd.theorem_predicate) out["theorem_predicate"] = *sd.theorem_predicate;
  return out.dump();
}

std::string cross_check(std::uint64_t n, std::optional<std::uint64_t> q, std::optional<std::uint64_t> base,
                        std::optional<std::uint64_t> order, std::optional<std::uint64_t> lam,
                        std::uint64_t seed, std::optional<std::uint64_t> budget) {
  const auto cv = cross_validate(params_of(n, q, base, order, lam), seed, budget_of(budget));
  return Json{{"agree", cv.agree},
              {"formula_total", cv.formula.total_factors},
              {"formula_symmetric", cv.formula.symmetric_factors},
              {"oracle_total", cv.oracle_total},
              {"oracle_symmetric", cv.oracle_symmetric}}
      .dump();
}

std::string table(const std::string& preset) {
  Json rows = Json::array();
  for (const auto& row : reproduce_table(table_preset(preset))) {
    rows.push_back({{"r", row.printed.r},
                    {"order_set", row.order_set},
                    {"total", row.report.total_factors},
                    {"symmetric", row.report.symmetric_factors},
                    {"printed_total", row.printed.total},
                    {"printed_symmetric", row.printed.symmetric},
                    {"erratum", row.erratum},
                    {"erratum_note", row.erratum_note}});
  }
  return rows.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Repeated-root-free constacyclic codes: factor counts and code enumeration";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  const auto instance = [](auto... extra) {
    return std::make_tuple(py::arg("n"), py::kw_only(), py::arg("q") = py::none(),
                           py::arg("base") = py::none(), py::arg("order") = py::none(),
                           py::arg("lam") = py::none(), extra...);
  };
  std::apply([&](auto... a) { m.def("analyze_json", &analyze, a...); }, instance());
  std::apply([&](auto... a) { m.def("count_lcd_str", &count_lcd_str, a...); }, instance());
  std::apply([&](auto... a) { m.def("self_dual_json", &self_dual, a...); }, instance());
  std::apply([&](auto... a) { m.def("factor_json", &factor, a...); },
             instance(py::arg("seed") = 0, py::arg("budget") = py::none()));
  std::apply([&](auto... a) { m.def("cross_validate_json", &cross_check, a...); },
             instance(py::arg("seed") = 0, py::arg("budget") = py::none()));
  m.def("table_json", &table, py::arg("preset"));

  m.def("multiplicative_order", &multiplicative_order, py::arg("a"), py::arg("m"));
  m.def("euler_phi", [](std::uint64_t n) { return euler_phi(n); }, py::arg("n"));
  m.def("divisors", [](std::uint64_t n) { return divisors(n); }, py::arg("n"));
  m.def(
      "negative_one_power",
      [](std::uint64_t a, std::uint64_t mod) { return has_negative_one_power(a, mod).minimal_w; },
      py::arg("a"), py::arg("m"), "Least w with a^w = -1 (mod m), or None.");
}

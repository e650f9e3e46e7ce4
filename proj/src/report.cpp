#include "constaspec/report.hpp"

#include "constaspec/error.hpp"

namespace constaspec {

Json to_json(const AnalysisReport& report) {
  const auto& p = report.params;
  Json profiles = Json::array();
  for (const auto& f : report.profiles) {
    profiles.push_back({{"d", f.divisor_d},
                        {"order", f.order_e},
                        {"degree", f.degree},
                        {"count", f.count},
                        {"symmetric", f.symmetric}});
  }
  return {{"mode", std::string(mode_name(p.mode))},
          {"q", p.q()},
          {"base_q", p.mode == Mode::hermitian ? Json(p.base) : Json(nullptr)},
          {"n", p.n},
          {"r", p.r},
          {"lambda", p.lambda.value()},
          {"n1", p.n1},
          {"n2", p.n2},
          {"profiles", std::move(profiles)},
          {"total", report.total_factors},
          {"symmetric_total", report.symmetric_factors},
          {"special_set", report.special_set}};
}

AnalysisReport analysis_from_json(const Json& json) {
  const auto mode_text = json.at("mode").get<std::string>();
  const auto lambda = LambdaValue{json.at("lambda").get<Field::Elem>()};
  const auto n = json.at("n").get<std::uint64_t>();
  ConstaParams params = [&] {
    if (mode_text == "euclidean") return euclidean_params(json.at("q").get<std::uint64_t>(), n, lambda);
    if (mode_text == "hermitian") {
      return hermitian_params(json.at("base_q").get<std::uint64_t>(), n, lambda);
    }
    throw Error(Errc::invalid_argument, "unknown mode " + mode_text);
  }();
  if (params.q() != json.at("q").get<std::uint64_t>()) {
    throw Error(Errc::invalid_argument, "q does not match base_q");
  }

  AnalysisReport report{std::move(params), {}, json.at("total").get<std::uint64_t>(),
                        json.at("symmetric_total").get<std::uint64_t>(),
                        json.at("special_set").get<std::vector<std::uint64_t>>()};
  for (const auto& f : json.at("profiles")) {
    report.profiles.push_back({f.at("d").get<std::uint64_t>(), f.at("order").get<std::uint64_t>(),
                               f.at("degree").get<std::uint64_t>(),
                               f.at("count").get<std::uint64_t>(), f.at("symmetric").get<bool>(),
                               std::nullopt});
  }
  return report;
}

Json coeffs_json(const Polynomial& f) { return f.coeffs(); }

Json to_json(const ConstacyclicCode& code, Mode kind) {
  return {{"generator_coeffs", coeffs_json(code.generator)},
          {"dimension", code.dimension},
          {"lcd", is_lcd(code, kind)},
          {"self_dual", is_self_dual(code, kind)}};
}

}  // namespace constaspec

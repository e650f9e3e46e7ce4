#pragma once

#include <json.hpp>

#include "constaspec/codes.hpp"
#include "constaspec/consta.hpp"

namespace constaspec {

using Json = nlohmann::json;

/// {mode, q, base_q, n, r, lambda, n1, n2, profiles:[{d, order, degree, count,
/// symmetric}], total, symmetric_total, special_set}
Json to_json(const AnalysisReport& report);
/// Inverse of to_json. Params are revalidated; profile data is taken as given.
AnalysisReport analysis_from_json(const Json& json);

Json coeffs_json(const Polynomial& f);
/// {generator_coeffs, dimension, lcd, self_dual}
Json to_json(const ConstacyclicCode& code, Mode kind);

}  // namespace constaspec

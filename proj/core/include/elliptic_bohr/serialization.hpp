#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "elliptic_bohr/extremal.hpp"
#include "elliptic_bohr/inequalities.hpp"
#include "elliptic_bohr/radius.hpp"

namespace ebohr {

nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const RadiusSolution& s);
nlohmann::json to_json(const ExtremalTrace& t);
nlohmann::json to_json(const OptimalityVerdict& v);

/// "%.17g"
std::string format_double(double x);

/// Header plus one row per step; columns k, r_k, re_zk, im_zk, sup_value, metric,
/// alpha_or_beta, bohr_sum_normalized.
std::string to_csv(const ExtremalTrace& t);

}  // namespace ebohr

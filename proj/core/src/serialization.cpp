#include "elliptic_bohr/serialization.hpp"

#include <cstdio>
#include <sstream>

namespace ebohr {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const InequalityReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json j{{"n", e.n}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"slack", e.slack}};
        if (!e.label.empty()) j["label"] = e.label;
        if (e.hypothesis_violated) j["hypothesis_violated"] = true;
        entries.push_back(std::move(j));
    }
    return {{"family", std::string(to_string(r.family))},
            {"R", r.R},
            {"entries", std::move(entries)},
            {"all_hold", r.all_hold},
            {"min_slack", r.min_slack}};
}

nlohmann::json to_json(const RadiusSolution& s) {
    return {{"kind", std::string(to_string(s.kind))},
            {"value", s.value},
            {"bracket", {s.bracket_lo, s.bracket_hi}},
            {"truncation_order", s.truncation_order},
            {"tail_bound", s.tail_bound},
            {"residual", s.residual}};
}

nlohmann::json to_json(const ExtremalTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"k", s.k},
                         {"r_k", s.r},
                         {"re_zk", s.z.real()},
                         {"im_zk", s.z.imag()},
                         {"sup_value", s.sup_value},
                         {"metric", s.metric},
                         {"alpha_or_beta", s.alpha_or_beta},
                         {"bohr_sum_normalized", s.bohr_sum_normalized},
                         {"epsilon", s.epsilon}});
    }
    return {{"family", std::string(to_string(t.family))}, {"R", t.R}, {"steps", std::move(steps)}};
}

nlohmann::json to_json(const OptimalityVerdict& v) {
    return {{"kind", std::string(to_string(v.kind))},
            {"R", v.R},
            {"infimum", v.infimum},
            {"series_value", v.series_value},
            {"witnessed_failure", v.witnessed_failure},
            {"consistent", v.consistent}};
}

std::string to_csv(const ExtremalTrace& t) {
    std::ostringstream out;
    out << "k,r_k,re_zk,im_zk,sup_value,metric,alpha_or_beta,bohr_sum_normalized\n";
    for (const auto& s : t.steps) {
        out << s.k << ',' << format_double(s.r) << ',' << format_double(s.z.real()) << ','
            << format_double(s.z.imag()) << ',' << format_double(s.sup_value) << ',' << format_double(s.metric)
            << ',' << format_double(s.alpha_or_beta) << ',' << format_double(s.bohr_sum_normalized) << '\n';
    }
    return out.str();
}

}  // namespace ebohr

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <elliptic_bohr/elliptic_bohr.hpp>

using namespace ebohr;

TEST_SUITE("serialization") {

TEST_CASE("format_double round trips") {
    for (double x : {0.1, 1.0 / 3.0, 0.20532867816504452, 1e-300, -2.5e17}) {
        const auto s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("report json") {
    InequalityReport r;
    r.family = InequalityFamily::ineq7;
    r.R = 0.1;
    r.add(1, 0.5, 1.0, "x");
    r.add(2, 0.5, 1.0, {}, true);
    const auto j = to_json(r);
    CHECK(j["family"] == "ineq7");
    CHECK(j["entries"].size() == 2);
    CHECK(j["entries"][0]["label"] == "x");
    CHECK_FALSE(j["entries"][0].contains("hypothesis_violated"));
    CHECK(j["entries"][1]["hypothesis_violated"] == true);
    CHECK(j["entries"][0]["slack"].get<double>() == 0.5);
}

TEST_CASE("solution json round trips values exactly") {
    const auto s = solve_radius(RadiusKind::real_coefficients, 1e-12);
    const auto j = nlohmann::json::parse(to_json(s).dump());
    CHECK(j["value"].get<double>() == s.value);
    CHECK(j["kind"] == "real_coefficients");
    CHECK(j["bracket"][0].get<double>() == s.bracket_lo);
}

TEST_CASE("trace csv") {
    const auto t = prop51_trace(ExtremalFamily::phi2, 0.1, 4, 6);
    const auto csv = to_csv(t);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,r_k,re_zk,im_zk,sup_value,metric,alpha_or_beta,bohr_sum_normalized");
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == 3);
    const auto j = to_json(t);
    CHECK(j["steps"].size() == 3);
    CHECK(j["steps"][0]["k"] == 4);
    CHECK(j["steps"][0]["r_k"].get<double>() == 0.9375);
}

TEST_CASE("verdict json") {
    const auto v = optimality_witness(RadiusKind::general, 0.2, 1e-10);
    const auto j = to_json(v);
    CHECK(j["witnessed_failure"] == true);
    CHECK(j["kind"] == "general");
}

}

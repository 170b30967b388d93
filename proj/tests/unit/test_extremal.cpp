#include <doctest.h>

#include <cmath>

#include <elliptic_bohr/errors.hpp>
#include <elliptic_bohr/extremal.hpp>
#include <elliptic_bohr/radius.hpp>

using namespace ebohr;

namespace {

// Direct summation of the defining Faber series; oracle for moderate r.
cplx phi_direct(ExtremalFamily fam, double r, cplx z, double R, int N = 4000) {
    const double s = R * R / r;
    cplx num = 0.0;
    double den = 0.0;
    const cplx I(0.0, 1.0);
    for (int n = 1; n <= N; ++n) {
        const double x = std::pow(R, 2 * n);
        const cplx F = std::pow(z, n) + x * std::pow(z, -n);
        const double p = std::pow(r, n), q = std::pow(s, n);
        if (fam == ExtremalFamily::phi1 || n % 2 == 0) {
            const cplx w = fam == ExtremalFamily::phi1 ? cplx(1.0) : std::pow(I, n);
            num += w * (p + q) * F / ((1.0 + x) * (1.0 + x));
            den += (p + q) / (1.0 + x);
        } else {
            num -= std::pow(I, n) * (p - q) * F / ((1.0 - x) * (1.0 - x));
            den += (p - q) / (1.0 - x);
        }
    }
    return -r + (1.0 + r) * num / den;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("family names") {
    CHECK(extremal_family_from_string("phi1") == ExtremalFamily::phi1);
    CHECK(extremal_family_from_string(to_string(ExtremalFamily::phi2)) == ExtremalFamily::phi2);
    CHECK_FALSE(extremal_family_from_string("phi3").has_value());
}

TEST_CASE("normalizing factors against 40-digit references") {
    CHECK(gamma_factor(0.5, 0.2) == doctest::Approx(1.0642310491428754892).epsilon(1e-14));
    CHECK(theta_factor(0.5, 0.2) == doctest::Approx(0.94302415203579554433).epsilon(1e-14));
    CHECK(gamma_factor(0.9, 0.2) == doctest::Approx(9.0088413554461627254).epsilon(1e-14));
    CHECK(epsilon1(0.9, 0.2) == doctest::Approx(0.0088413554461627254).epsilon(1e-12));
    CHECK(theta_factor(0.9, 0.2) == doctest::Approx(8.9918429036117054817).epsilon(1e-14));
    CHECK(epsilon2(0.9, 0.2) == doctest::Approx(-0.0081570963882945183).epsilon(1e-12));
}

TEST_CASE("epsilon without cancellation near r = 1") {
    for (int k = 4; k <= 30; k += 2) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        const double e1 = epsilon1(r, 0.2), e2 = epsilon2(r, 0.2);
        CHECK(std::isfinite(e1));
        CHECK(e1 > 0.0);
        CHECK(e2 < 0.0);
        CHECK(std::abs(e1) < 0.02);
    }
}

TEST_CASE("closed-form evaluation matches direct summation") {
    CHECK(std::abs(phi1_eval(0.9, std::polar(1.0, 0.7), 0.2) - cplx(-0.9578808393436911, 0.27342472587457733)) < 1e-12);
    CHECK(std::abs(phi2_eval(0.9, std::polar(1.0, 0.7), 0.2) - cplx(-0.9760026841116163, -0.23382011803171387)) < 1e-12);
    CHECK(std::abs(phi1_eval(0.5, std::polar(1.0, 2.0), 0.1) - cplx(-0.9156888285606588, 0.4090590064415525)) < 1e-12);
    CHECK(std::abs(phi2_eval(0.5, std::polar(1.0, 2.0), 0.1) - cplx(0.3939144803226966, 0.9267943381072408)) < 1e-12);
    for (auto fam : {ExtremalFamily::phi1, ExtremalFamily::phi2})
        for (double r : {0.3, 0.7, 0.95})
            for (double R : {0.0, 0.05, 0.2})
                for (double t : {0.0, 0.4, 1.9, 3.0}) {
                    const cplx z = std::polar(1.0, t);
                    CHECK(std::abs(phi_eval(fam, r, z, R) - phi_direct(fam, r, z, R)) < 1e-11);
                }
}

TEST_CASE("interior points") {
    const cplx z(0.3, -0.4);
    CHECK(std::abs(phi1_eval(0.6, z, 0.2) - phi_direct(ExtremalFamily::phi1, 0.6, z, 0.2, 150)) < 1e-12);
    CHECK_THROWS_AS(phi1_eval(0.6, cplx(0.1, 0.0), 0.2), RangeError);
    CHECK_THROWS_AS(phi1_eval(0.6, cplx(2.0, 0.0), 0.2), RangeError);
}

TEST_CASE("fixed points of the normalization") {
    for (double R : {0.0, 0.1, 0.2})
        for (double r : {0.3, 0.9, 1.0 - std::ldexp(1.0, -16)}) {
            CHECK(std::abs(phi1_eval(r, 1.0, R) - cplx(1.0)) < 1e-10);
            CHECK(std::abs(phi2_eval(r, cplx(0.0, 1.0), R) - cplx(1.0)) < 1e-10);
        }
}

TEST_CASE("disc limit is a Mobius map") {
    for (double r : {0.2, 0.6, 0.9})
        for (double t : {0.3, 1.5, 2.8}) {
            const cplx z = std::polar(1.0, t);
            CHECK(std::abs(phi1_eval(r, z, 0.0) - (z - r) / (1.0 - r * z)) < 1e-13);
            CHECK(std::abs(phi1_eval(r, z, 0.0)) == doctest::Approx(1.0).epsilon(1e-13));
        }
}

TEST_CASE("argmax location") {
    // |phi1| peaks at z = -1 once R > 0; |phi2| has a symmetric pair around i.
    for (double R : {0.1, 0.2})
        for (int k : {4, 8, 12}) {
            const double r = 1.0 - std::ldexp(1.0, -k);
            const cplx z1 = argmax_on_circle(ExtremalFamily::phi1, r, R);
            CHECK(std::abs(z1 - cplx(-1.0)) < 1e-5);
            const cplx z2 = argmax_on_circle(ExtremalFamily::phi2, r, R);
            CHECK(std::abs(std::abs(z2) - 1.0) < 1e-14);
            const double v = std::abs(phi2_eval(r, z2, R));
            for (int j = 0; j < 2048; ++j) CHECK(std::abs(phi2_eval(r, std::polar(1.0, 2.0 * kPi * j / 2048.0), R)) <= v * (1.0 + 1e-13));
        }
}

TEST_CASE("extremal Faber series reproduces the closed form") {
    for (auto fam : {ExtremalFamily::phi1, ExtremalFamily::phi2}) {
        const double r = 0.6, R = 0.2;
        const auto s = extremal_faber_series(fam, r, R, 200);
        const cplx w = std::polar(1.0, 1.1);
        CHECK(std::abs(eval_series(s, w) - phi_eval(fam, r, w, R)) < 1e-12);
    }
}

TEST_CASE("normalized Bohr sum") {
    // Below the radius the extremal functions satisfy the inequality, above it they do not.
    const double r = 1.0 - std::ldexp(1.0, -12);
    CHECK(normalized_bohr_sum(ExtremalFamily::phi2, r, argmax_on_circle(ExtremalFamily::phi2, r, 0.2), 0.2) > 1.0);
    CHECK(normalized_bohr_sum(ExtremalFamily::phi2, r, argmax_on_circle(ExtremalFamily::phi2, r, 0.15), 0.15) < 1.0);
}

TEST_CASE("trace properties") {
    for (auto fam : {ExtremalFamily::phi1, ExtremalFamily::phi2})
        for (double R : {0.1, 0.2}) {
            const auto t = prop51_trace(fam, R, 4, 16);
            REQUIRE(t.steps.size() == 13);
            CHECK(std::abs(t.steps.back().metric) < std::abs(t.steps.front().metric));
            CHECK(std::abs(t.steps.back().metric) < 0.1);
            for (std::size_t i = 1; i < t.steps.size(); ++i) {
                CHECK(std::abs(t.steps[i].epsilon) < std::abs(t.steps[i - 1].epsilon));
                CHECK(std::abs(t.steps[i].alpha_or_beta) < std::abs(t.steps[i - 1].alpha_or_beta));
                CHECK(t.steps[i].r > t.steps[i - 1].r);
            }
        }
    const auto flat = prop51_trace(ExtremalFamily::phi1, 0.0, 2, 6);
    for (const auto& s : flat.steps) {
        CHECK(std::abs(s.metric) < 1e-12);
        CHECK(s.epsilon == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(prop51_trace(ExtremalFamily::phi1, 0.2, 0, 4), RangeError);
    CHECK_THROWS_AS(prop51_trace(ExtremalFamily::phi1, 0.2, 4, 41), RangeError);
    CHECK_THROWS_AS(prop51_trace(ExtremalFamily::phi1, 0.6, 1, 4), RangeError);
}

TEST_CASE("asymptotic components check") {
    for (double R : {0.1, 0.2}) CHECK(lemma52_53_check(R, 4, 16).all_hold);
    CHECK_THROWS_AS(lemma52_53_check(0.2, 4, 4), RangeError);
}

TEST_CASE("optimality witness") {
    const auto below = optimality_witness(RadiusKind::real_coefficients, 0.2, 1e-10);
    CHECK_FALSE(below.witnessed_failure);
    CHECK(below.consistent);
    const auto above = optimality_witness(RadiusKind::real_coefficients, 0.21, 1e-10);
    CHECK(above.witnessed_failure);
    CHECK(above.consistent);
    CHECK(above.grid_points == 65);
    const auto gen = optimality_witness(RadiusKind::general, 0.2, 1e-10);
    CHECK(gen.witnessed_failure);
    CHECK(gen.series_value == doctest::Approx(1.0330797741561743).epsilon(1e-10));
}

}

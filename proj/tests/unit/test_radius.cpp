#include <doctest.h>

#include <cmath>

#include <elliptic_bohr/coefficients.hpp>
#include <elliptic_bohr/errors.hpp>
#include <elliptic_bohr/radius.hpp>

using namespace ebohr;

namespace {
// High-precision references (40-digit evaluation of the defining series and roots).
constexpr double kS1At01 = 0.44048004480080048408;
constexpr double kS1At02 = 0.96897311379143266776;
constexpr double kS0At01 = 0.44848085288081648490;
constexpr double kS0At02 = 1.03307977415617432583;
constexpr double kR1 = 0.20532867816504553079;
constexpr double kR0 = 0.19506643229939655531;
}  // namespace

TEST_SUITE("radius") {

TEST_CASE("kind names") {
    CHECK(radius_kind_from_string("real") == RadiusKind::real_coefficients);
    CHECK(radius_kind_from_string("real_coefficients") == RadiusKind::real_coefficients);
    CHECK(radius_kind_from_string("general") == RadiusKind::general);
    CHECK_FALSE(radius_kind_from_string("complex").has_value());
    CHECK(radius_kind_from_string(to_string(RadiusKind::general)) == RadiusKind::general);
}

TEST_CASE("series values against references") {
    CHECK(series_real(0.1, 1e-17).value == doctest::Approx(kS1At01).epsilon(2e-16));
    CHECK(series_real(0.2, 1e-17).value == doctest::Approx(kS1At02).epsilon(2e-16));
    CHECK(series_general(0.1, 1e-17).value == doctest::Approx(kS0At01).epsilon(2e-16));
    CHECK(series_general(0.2, 1e-17).value == doctest::Approx(kS0At02).epsilon(2e-16));
    CHECK(series_real(0.0, 1e-15).value == 0.0);
}

TEST_CASE("tail bounds are rigorous") {
    for (double R : {0.05, 0.2, 0.4}) {
        for (int N : {3, 5, 10}) {
            const auto trunc = series_real(R, 1e-15, Truncation::fixed(N));
            const auto full = series_real(R, 1e-17);
            CHECK(trunc.truncation_order == N);
            CHECK(full.value - trunc.value >= 0.0);
            CHECK(full.value - trunc.value <= trunc.tail_bound + 4e-16 * full.value);
            const auto gt = series_general(R, 1e-15, Truncation::fixed(N));
            const auto gf = series_general(R, 1e-17);
            CHECK(gf.value - gt.value <= gt.tail_bound + 4e-16 * gf.value);
        }
    }
}

TEST_CASE("series ordering and monotonicity") {
    double prev_r = 0.0, prev_g = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double R = 0.01 * i;
        const double s1 = series_real(R, 1e-16).value, s0 = series_general(R, 1e-16).value;
        CHECK(s0 > s1);
        CHECK(s1 > prev_r);
        CHECK(s0 > prev_g);
        prev_r = s1;
        prev_g = s0;
    }
    CHECK_THROWS_AS(series_real(1.0, 1e-10), RangeError);
    CHECK_THROWS_AS(series_general(-0.1, 1e-10), DomainError);
    CHECK_THROWS_AS(series_general(1.0, 1e-10), DivergenceError);
}

TEST_CASE("solved radii") {
    const auto r1 = solve_radius(RadiusKind::real_coefficients, 1e-14);
    CHECK(std::abs(r1.value - kR1) < 2e-14);
    CHECK(r1.bracket_lo <= r1.value);
    CHECK(r1.value <= r1.bracket_hi);
    CHECK(r1.bracket_hi - r1.bracket_lo <= 2e-14);
    CHECK(std::abs(r1.residual) < 1e-13);
    const auto r0 = solve_radius(RadiusKind::general, 1e-14);
    CHECK(std::abs(r0.value - kR0) < 2e-14);
    CHECK(r0.value < r1.value);
    SolverOptions fixed;
    fixed.truncation = Truncation::fixed(120);
    CHECK(std::abs(solve_radius(RadiusKind::general, 1e-12, fixed).value - kR0) < 1e-12);
}

TEST_CASE("solver guards") {
    CHECK_THROWS_AS(solve_radius(RadiusKind::real_coefficients, 1e-15), RangeError);
    SolverOptions tiny;
    tiny.truncation = Truncation::fixed(2);
    CHECK_THROWS_AS(solve_radius(RadiusKind::general, 1e-12, tiny), RangeError);
    SolverOptions bad;
    bad.bracket_lo = 0.3;
    bad.bracket_hi = 0.5;
    CHECK_THROWS(solve_radius(RadiusKind::real_coefficients, 1e-10, bad));
}

TEST_CASE("rho conversions") {
    CHECK(rho_from_R(0.2) == doctest::Approx(5.0));
    CHECK(R_from_rho(rho_from_R(0.37)) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK_THROWS(rho_from_R(0.0));
    CHECK_THROWS(R_from_rho(1.0));
}

TEST_CASE("Bohr sum and decision") {
    const FaberSeries s(0.2, {0.5, 0.25});
    CHECK(bohr_sum(s, 0.2) == doctest::Approx(0.5 + 0.25 * (0.2 + 0.2)));
    CHECK(bohr_sum(s, 1.0) == doctest::Approx(0.5 + 0.25 * 1.04));
    CHECK_THROWS_AS(bohr_sum(s, 0.1), RangeError);
    CHECK(bohr_decision(s).bohr_holds);
    CHECK_FALSE(bohr_decision(FaberSeries(0.2, {0.9, 0.5})).bohr_holds);
}

TEST_CASE("Bohr inequality holds for normalized series below the general radius") {
    const double R = 0.19;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto p = generate_positive_real_part(seed, R, 24);
        const double m = certified_max_modulus(p);
        CHECK(m >= max_boundary_modulus(p, 256));
        CHECK(bohr_decision(p.scaled(1.0 / m)).bohr_holds);
    }
}

}

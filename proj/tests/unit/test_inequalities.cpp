#include <doctest.h>

#include <cmath>

#include <elliptic_bohr/coefficients.hpp>
#include <elliptic_bohr/errors.hpp>
#include <elliptic_bohr/inequalities.hpp>
#include <elliptic_bohr/radius.hpp>

using namespace ebohr;

namespace {

// Real part of a Herglotz-type kernel on the ellipse: a_0 = 1, a_n = 2 t^n/(1+R^{2n}),
// which saturates the basic coefficient bound as t -> 1.
FaberSeries near_extremal(double R, double t, int N) {
    std::vector<cplx> c{1.0};
    for (int n = 1; n <= N; ++n) c.emplace_back(2.0 * std::pow(t, n) / (1.0 + std::pow(R, 2 * n)));
    return FaberSeries(R, c);
}

}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("family names round trip") {
    for (auto f : {InequalityFamily::caratheodory_basic, InequalityFamily::lemma33, InequalityFamily::ineq7,
                   InequalityFamily::prop31, InequalityFamily::section4_main, InequalityFamily::lemma44,
                   InequalityFamily::real_sharpening, InequalityFamily::derivative_bounds,
                   InequalityFamily::lemma52_53}) {
        const auto back = family_from_string(to_string(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_string("nope").has_value());
}

TEST_CASE("report bookkeeping") {
    InequalityReport r;
    r.add(1, 1.0, 2.0);
    CHECK(r.all_hold);
    CHECK(r.min_slack == 1.0);
    r.add(2, 2.0 + 1e-12, 2.0);
    CHECK(r.all_hold);
    r.add(3, 3.0, 2.0);
    CHECK_FALSE(r.all_hold);
    CHECK(r.min_slack == -1.0);
}

TEST_CASE("basic bound emits both forms and holds for generated series") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto s = generate_positive_real_part(seed, 0.2, 32);
        const auto rep = check_caratheodory_basic(s);
        CHECK(rep.all_hold);
        int eq5 = 0, eq6 = 0;
        for (const auto& e : rep.entries) {
            eq5 += e.label == "eq5";
            eq6 += e.label == "eq6";
        }
        CHECK(eq5 == 32);
        CHECK(eq6 == 32);
    }
}

TEST_CASE("basic bound is sharp and detects violations") {
    const double R = 0.2;
    const auto s = near_extremal(R, 1.0 - 1e-9, 10);
    auto rep = check_caratheodory_basic(s);
    CHECK(rep.all_hold);
    CHECK(rep.min_slack < 1e-6);
    const auto bad = near_extremal(R, 1.01, 10);
    CHECK_FALSE(check_caratheodory_basic(bad).all_hold);
}

TEST_CASE("all families hold on generated series") {
    for (double R : {0.05, 0.1, 0.2}) {
        for (std::uint64_t seed = 100; seed < 130; ++seed) {
            const auto s = generate_positive_real_part(seed, R, 64);
            CHECK(check_lemma33(s).all_hold);
            CHECK(check_ineq7(s).all_hold);
            CHECK(check_prop31(s).all_hold);
            CHECK(check_section4_main(s).all_hold);
            CHECK(check_lemma44(s).all_hold);
        }
    }
}

TEST_CASE("real sharpening holds for real series only in general") {
    GeneratorOptions opts;
    opts.real_coefficients = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(check_real_sharpening(generate_positive_real_part(seed, 0.2, 32, opts)).all_hold);
    // a_1 purely imaginary of size 2/(1-R^2) * (1-eps) satisfies the general bound but not the real one.
    const double R = 0.2;
    const FaberSeries s(R, {1.0, cplx(0.0, 2.0 / (1.0 - R * R) * 0.999)});
    CHECK(check_caratheodory_basic(s).all_hold);
    CHECK_FALSE(check_real_sharpening(s).all_hold);
}

TEST_CASE("hypothesis guards") {
    const FaberSeries s(0.3, {1.0, 0.1});
    CHECK_THROWS_AS(check_prop31(s), HypothesisError);
    CHECK_THROWS_AS(check_lemma44(s), HypothesisError);
    CHECK_THROWS_AS(check_caratheodory_basic(FaberSeries(0.1, {0.0, 0.1})), HypothesisError);
    CHECK_THROWS_AS(check_caratheodory_basic(FaberSeries(0.1, {-1.0, 0.1})), HypothesisError);
}

TEST_CASE("imaginary part of a0 is irrelevant") {
    const auto s = generate_positive_real_part(9, 0.15, 32);
    std::vector<cplx> c(s.coefficients().begin(), s.coefficients().end());
    c[0] += cplx(0.0, 5.0);
    const FaberSeries t(0.15, c);
    CHECK(check_section4_main(s).min_slack == doctest::Approx(check_section4_main(t).min_slack).epsilon(1e-14));
    CHECK(check_lemma33(s).min_slack == doctest::Approx(check_lemma33(t).min_slack).epsilon(1e-14));
}

TEST_CASE("prop31 endpoint is sharp at the coefficient bounds") {
    // With |a_n| and |a_{2n}| at their individual maxima the pair sum equals the rhs.
    const double R = 0.2;
    std::vector<cplx> c(9, 0.0);
    c[0] = 1.0;
    c[1] = 2.0 / (1.0 - R * R);
    c[2] = 2.0 / (1.0 + std::pow(R, 4));
    const auto rep = check_prop31(FaberSeries(R, c));
    REQUIRE_FALSE(rep.entries.empty());
    CHECK(std::abs(rep.entries.front().slack) < 1e-14);
}

TEST_CASE("lemma44 is the elliptic Caratheodory-Bohr sum") {
    // Sum of the bounds 2/(1+R^{2n}) (even) and 2/(1-R^{2n}) (odd) times R^n is S_0/2.
    const double R = 0.19;
    std::vector<cplx> c{1.0};
    for (int n = 1; n <= 60; ++n) c.emplace_back(2.0 / (n % 2 == 0 ? 1.0 + std::pow(R, 2 * n) : 1.0 - std::pow(R, 2 * n)));
    const auto rep = check_lemma44(FaberSeries(R, c));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].rhs == doctest::Approx(0.5 * series_general(R, 1e-17).value).epsilon(1e-14));
    CHECK(std::abs(rep.entries[0].slack) < 1e-12);
}

TEST_CASE("G maximization") {
    for (double R : {0.05, 0.2, 1.0 / std::sqrt(5.0)}) {
        for (int n = 1; n <= 10; ++n) {
            const auto m = maximize_G(1.0, R, n);
            CHECK(m.x1 < 0.0);
            CHECK(m.x2 >= m.right_endpoint * (1.0 - 1e-15));
            CHECK(m.x_star == doctest::Approx(m.right_endpoint).epsilon(1e-15));
            CHECK(m.value == doctest::Approx(G_function(m.x_star, 1.0, R, n)).epsilon(1e-15));
            for (int j = 0; j <= 50; ++j) CHECK(G_function(m.right_endpoint * j / 50.0, 1.0, R, n) <= m.value * (1.0 + 1e-15));
        }
    }
    CHECK_THROWS_AS(maximize_G(1.0, 0.5, 1), RangeError);
    CHECK_THROWS_AS(maximize_G(0.0, 0.2, 1), DomainError);
}

TEST_CASE("G scales linearly with a0") {
    for (int n = 1; n <= 5; ++n) {
        const auto a = maximize_G(1.0, 0.2, n), b = maximize_G(3.0, 0.2, n);
        CHECK(b.value == doctest::Approx(3.0 * a.value).epsilon(1e-14));
        CHECK(b.x2 == doctest::Approx(3.0 * a.x2).epsilon(1e-14));
    }
}

}

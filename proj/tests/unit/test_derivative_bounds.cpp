#include <doctest.h>

#include <cmath>

#include <elliptic_bohr/derivative_bounds.hpp>
#include <elliptic_bohr/errors.hpp>
#include <elliptic_bohr/inequalities.hpp>

using namespace ebohr;

namespace {

double min_slack_with_label(const InequalityReport& r, const std::string& label) {
    double m = INFINITY;
    for (const auto& e : r.entries)
        if (e.label == label) m = std::min(m, e.slack);
    return m;
}

}  // namespace

TEST_SUITE("derivative_bounds") {

TEST_CASE("auxiliary functions") {
    const double R = 0.3, a0 = 1.3;
    for (int n = 1; n <= 2; ++n) {
        // Direct forms divide by R^{4n}; keep n small.
        const double x0 = x0_of(a0, R, n);
        CHECK(x0 == doctest::Approx(2.0 * a0 / (1.0 + std::pow(R, 4 * n))));
        const double q = std::pow(R, 4 * n);
        CHECK(h_direct(x0, a0, R, n) == doctest::Approx(2.0 * a0 / (1.0 + q * q)).epsilon(1e-8));
        CHECK(std::abs(h_direct(std::sqrt(4.0 * a0 * a0 * (1.0 + q * q)) / ((1.0 + q) * (1.0 + q)), a0, R, n)) < 1e-8);
        CHECK(g_direct(0.0, a0, R, n) == doctest::Approx(2.0 * a0 / (1.0 - q * q)).epsilon(1e-14));
    }
}

TEST_CASE("single-step derivative bound") {
    for (double R : {0.1, 0.2, 0.5}) {
        for (int n = 1; n <= 8; ++n) {
            const auto rep = check_lemma41(n, R, 1.0);
            CHECK(rep.all_hold);
            CHECK(min_slack_with_label(rep, "lemma41_bound") > 3.0);
            CHECK(min_slack_with_label(rep, "lemma41_exact") > -1e-7);
        }
    }
}

TEST_CASE("single-step bound is scale invariant in a0") {
    const auto a = check_lemma41(2, 0.2, 1.0), b = check_lemma41(2, 0.2, 4.0);
    CHECK(a.all_hold);
    CHECK(b.all_hold);
}

TEST_CASE("f_n derivative bound") {
    for (double R : {0.1, 0.2, 0.5}) {
        for (int n = 1; n <= 8; ++n) {
            const auto rep = check_lemma43(n, R, 1.0);
            CHECK(rep.all_hold);
            CHECK(min_slack_with_label(rep, "lemma43_bound") > 0.05);
        }
    }
}

TEST_CASE("chain bound: printed form fails beyond one step, corrected form holds") {
    const double R = 0.2;
    CHECK(check_lemma42_chain(1, 0, R, 1.0, ChainBound::literal).all_hold);
    for (int k = 1; k <= 3; ++k) {
        CHECK_FALSE(check_lemma42_chain(1, k, R, 1.0, ChainBound::literal).all_hold);
        CHECK(check_lemma42_chain(1, k, R, 1.0, ChainBound::corrected).all_hold);
    }
    for (int n0 : {3, 5})
        for (int k = 0; k <= 2; ++k) CHECK(check_lemma42_chain(n0, k, R, 1.0, ChainBound::corrected).all_hold);
}

TEST_CASE("chain tail sums") {
    for (int n0 : {1, 3, 5})
        for (double R : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) CHECK(check_lemma42_tail(n0, R).all_hold);
}

TEST_CASE("aggregate check and guards") {
    for (int n0 : {1, 3, 5}) CHECK(check_lemma41_42_43(n0, 3, 0.2, 1.0).all_hold);
    CHECK_THROWS_AS(check_lemma41_42_43(2, 3, 0.2, 1.0), HypothesisError);
    CHECK_THROWS_AS(check_lemma41_42_43(1, 3, 0.6, 1.0), RangeError);
    CHECK_THROWS_AS(check_lemma41_42_43(1, 3, 0.2, 0.0), DomainError);
}

TEST_CASE("critical point x2 zeroes G'") {
    for (double R : {0.01, 0.1, 0.2, 1.0 / std::sqrt(5.0)}) {
        for (int n = 1; n <= 10; ++n) {
            CHECK(std::abs(G_prime_at_x2(1.0, R, n)) < 1e-9);
            const auto m = maximize_G(1.0, R, n);
            CHECK(m.x2 >= 2.0 / (1.0 + std::pow(R, 4 * n)));
        }
    }
}

}

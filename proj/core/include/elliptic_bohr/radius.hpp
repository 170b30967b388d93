#pragma once

#include <optional>
#include <string_view>

#include "elliptic_bohr/coefficients.hpp"

namespace ebohr {

enum class RadiusKind { real_coefficients, general };

std::string_view to_string(RadiusKind k);
/// Accepts "real", "real_coefficients", "general".
std::optional<RadiusKind> radius_kind_from_string(std::string_view name);

/// How a defining series is truncated.
struct Truncation {
    int fixed_order = 0;  ///< 0 selects adaptive truncation
    static Truncation adaptive() { return {}; }
    static Truncation fixed(int N) { return {N}; }
    [[nodiscard]] bool is_adaptive() const { return fixed_order <= 0; }
};

struct SeriesEvaluation {
    double value = 0.0;      ///< compensated partial sum
    int truncation_order = 0;
    double tail_bound = 0.0; ///< rigorous bound on the omitted tail
};

/// S_1(R) = sum_{n>=1} 4 R^n / (1 + R^{2n}). Adaptive truncation stops once the tail
/// bound 4 R^{N+1}/(1-R) is below tol/2. Throws DivergenceError if R >= 1.
SeriesEvaluation series_real(double R, double tol, Truncation trunc = Truncation::adaptive());

/// S_0(R): even n use 4 R^n/(1+R^{2n}), odd n use 4 R^n/(1-R^{2n}).
/// Tail bound 4 R^{N+1}/((1-R)(1-R^2)).
SeriesEvaluation series_general(double R, double tol, Truncation trunc = Truncation::adaptive());

SeriesEvaluation defining_series(RadiusKind kind, double R, double tol,
                                 Truncation trunc = Truncation::adaptive());

struct SolverOptions {
    double bracket_lo = 1e-6;
    double bracket_hi = 0.5;
    int max_iterations = 200;
    Truncation truncation = Truncation::adaptive();
};

struct RadiusSolution {
    RadiusKind kind{};
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int truncation_order = 0;
    double tail_bound = 0.0;
    double residual = 0.0;  ///< series(value) - 1
    int iterations = 0;
};

/// Bisection for series(R) = 1. The bracket invariant series(lo) + tail < 1 < series(hi)
/// is maintained with tail bounds included. Throws RangeError if tol < 1e-14 or the
/// initial bracket does not straddle the root.
RadiusSolution solve_radius(RadiusKind kind, double tol, const SolverOptions& opts = {});

/// rho = 1/R for 0 < R < 1, and back. Throw RangeError outside.
double rho_from_R(double R);
double R_from_rho(double rho);

/// |a_0| + sum |a_n| (r^n + R^{2n} r^{-n}) for R <= r <= 1.
double bohr_sum(const FaberSeries& s, double r);

struct BohrVerdict {
    double sum = 0.0;  ///< bohr_sum at r = R
    bool bohr_holds = false;
};

/// The majorant sum is increasing in r, so only r = R needs checking.
BohrVerdict bohr_decision(const FaberSeries& s);

/// Max of |s| on the ellipse boundary by sampling, doubled until two successive
/// estimates agree to rel_tol (starting at 8192 samples, at most 4 doublings).
double certified_max_modulus(const FaberSeries& s, double rel_tol = 1e-9);

}  // namespace ebohr

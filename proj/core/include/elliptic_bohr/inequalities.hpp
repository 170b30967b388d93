#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elliptic_bohr/coefficients.hpp"

namespace ebohr {

enum class InequalityFamily {
    caratheodory_basic,
    lemma33,
    ineq7,
    prop31,
    section4_main,
    lemma44,
    real_sharpening,
    derivative_bounds,
    lemma52_53,
};

std::string_view to_string(InequalityFamily f);
std::optional<InequalityFamily> family_from_string(std::string_view name);

struct InequalityEntry {
    int n = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  ///< rhs - lhs
    std::string label;   ///< distinguishes sub-checks sharing an index
    bool hypothesis_violated = false;
};

struct InequalityReport {
    InequalityFamily family{};
    double R = 0.0;
    double tolerance = 1e-10;
    std::vector<InequalityEntry> entries;
    bool all_hold = true;
    double min_slack = 0.0;

    /// Appends lhs <= rhs and updates all_hold / min_slack.
    void add(int n, double lhs, double rhs, std::string label = {}, bool hypothesis_violated = false);
    /// True when slack >= -tolerance * max(1, |rhs|).
    [[nodiscard]] bool entry_holds(const InequalityEntry& e) const;
};

inline constexpr double kDefaultInequalityTolerance = 1e-10;

/// Upper end of the regime in which the two-index bound and the elliptic
/// Caratheodory sum are established.
inline constexpr double kProp31MaxR = 0.2053;

// All checks require re(a_0) > 0 (HypothesisError otherwise) and use re(a_0)
// in place of a_0. Subtracting i im(a_0) is a translation that keeps re f
// unchanged, so the hypotheses carry over.

/// (1+R^{2n})^2 re^2 a_n + (1-R^{2n})^2 im^2 a_n <= 4 re^2 a_0 (label "eq5")
/// and |re a_n| <= 2 re a_0 / (1+R^{2n}) (label "eq6"), for 1 <= n <= N.
InequalityReport check_caratheodory_basic(const FaberSeries& s);

/// |a_n| <= 2 sqrt(1+R^{4n})/(1-R^{4n}) sqrt(re a_0 - R^{2n} re a_{2n}) sqrt(re a_0), 2n <= N.
InequalityReport check_lemma33(const FaberSeries& s);

/// |a_{2n}| <= 2/(1-R^{4n}) sqrt(re^2 a_0 - R^{4n} re^2 a_{2n}), 2n <= N.
InequalityReport check_ineq7(const FaberSeries& s);

/// |a_n| R^n + |a_{2n}| R^{2n} <= 2 re a_0 R^n/(1-R^{2n}) + 2 re a_0 R^{2n}/(1+R^{4n}).
/// Throws HypothesisError if R > kProp31MaxR.
InequalityReport check_prop31(const FaberSeries& s);

/// re^2 a_{2n} <= 4 a_0 (1+R^{8n})/(1+R^{4n})^4 (a_0 + R^{4n} re a_{4n}), 4n <= N.
InequalityReport check_section4_main(const FaberSeries& s);

/// sum R^n |a_n| <= re a_0 / 2 * S_0(R) with S_0 the parity-split series.
/// Single entry. Throws HypothesisError if R > kProp31MaxR.
InequalityReport check_lemma44(const FaberSeries& s);

/// |a_n| <= 2 re a_0 / (1+R^{2n}); meaningful for real-coefficient series.
InequalityReport check_real_sharpening(const FaberSeries& s);

/// G(x) = sqrt((1+R^{4n}) re a_0 (re a_0 + R^{2n} x)) + R^n sqrt(re^2 a_0 - R^{4n} x^2).
double G_function(double x, double a0, double R, int n);

struct GMaximum {
    double x_star = 0.0;          ///< maximizer on [0, right_endpoint]
    double value = 0.0;           ///< G(x_star)
    double right_endpoint = 0.0;  ///< 2 a_0 / (1+R^{4n})
    double x1 = 0.0;              ///< negative root of the critical-point quadratic
    double x2 = 0.0;              ///< positive root
};

/// Throws RangeError unless 0 < R <= 1/sqrt(5), DomainError unless a0 > 0, n >= 1.
GMaximum maximize_G(double a0, double R, int n);

}  // namespace ebohr

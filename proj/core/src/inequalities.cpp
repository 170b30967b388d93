#include "elliptic_bohr/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/radius.hpp"
#include "elliptic_bohr/summation.hpp"

namespace ebohr {

namespace {

constexpr std::array<std::pair<InequalityFamily, std::string_view>, 9> kFamilyNames{{
    {InequalityFamily::caratheodory_basic, "caratheodory_basic"},
    {InequalityFamily::lemma33, "lemma33"},
    {InequalityFamily::ineq7, "ineq7"},
    {InequalityFamily::prop31, "prop31"},
    {InequalityFamily::section4_main, "section4_main"},
    {InequalityFamily::lemma44, "lemma44"},
    {InequalityFamily::real_sharpening, "real_sharpening"},
    {InequalityFamily::derivative_bounds, "derivative_bounds"},
    {InequalityFamily::lemma52_53, "lemma52_53"},
}};

double positive_re_a0(const FaberSeries& s) {
    const double a0 = s[0].real();
    if (!(a0 > 0.0)) {
        throw HypothesisError(a0 == 0.0 ? "re(a_0) = 0 is degenerate; a strictly positive mean is required"
                                        : "re(a_0) must be > 0");
    }
    return a0;
}

// Radicands that vanish at extremal configurations come out as tiny negatives;
// anything beyond rounding means the positivity hypothesis failed.
struct Radicand {
    double value;
    bool violated;
};

Radicand clamp_radicand(double v, double scale) {
    if (v >= 0.0) return {v, false};
    if (v >= -1e-12 * scale) return {0.0, false};
    return {0.0, true};
}

InequalityReport make_report(InequalityFamily fam, const FaberSeries& s) {
    InequalityReport r;
    r.family = fam;
    r.R = s.R();
    r.tolerance = kDefaultInequalityTolerance;
    return r;
}

void require_prop31_regime(double R) {
    if (R > kProp31MaxR) {
        throw HypothesisError("R = " + std::to_string(R) + " outside the regime R <= 0.2053");
    }
}

}  // namespace

std::string_view to_string(InequalityFamily f) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (fam == f) return name;
    }
    return "unknown";
}

std::optional<InequalityFamily> family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames) {
        if (n == name) return fam;
    }
    return std::nullopt;
}

bool InequalityReport::entry_holds(const InequalityEntry& e) const {
    if (e.hypothesis_violated) return false;
    return e.slack >= -tolerance * std::max(1.0, std::fabs(e.rhs));
}

void InequalityReport::add(int n, double lhs, double rhs, std::string label, bool hypothesis_violated) {
    InequalityEntry e{n, lhs, rhs, rhs - lhs, std::move(label), hypothesis_violated};
    min_slack = entries.empty() ? e.slack : std::min(min_slack, e.slack);
    if (!entry_holds(e) || !std::isfinite(e.slack)) all_hold = false;
    entries.push_back(std::move(e));
}

InequalityReport check_caratheodory_basic(const FaberSeries& s) {
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::caratheodory_basic, s);
    const double R2 = s.R() * s.R();
    double p = 1.0;
    for (int n = 1; n <= s.order(); ++n) {
        p *= R2;
        const double re = s[n].real();
        const double im = s[n].imag();
        const double lhs5 = (1.0 + p) * (1.0 + p) * re * re + (1.0 - p) * (1.0 - p) * im * im;
        rep.add(n, lhs5, 4.0 * a0 * a0, "eq5");
        rep.add(n, std::fabs(re), 2.0 * a0 / (1.0 + p), "eq6");
    }
    return rep;
}

InequalityReport check_lemma33(const FaberSeries& s) {
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::lemma33, s);
    const double R2 = s.R() * s.R();
    double p = 1.0;
    for (int n = 1; 2 * n <= s.order(); ++n) {
        p *= R2;
        const double q = p * p;
        const auto rad = clamp_radicand(a0 - p * s[2 * n].real(), a0);
        const double rhs = 2.0 * std::sqrt(1.0 + q) / (1.0 - q) * std::sqrt(rad.value) * std::sqrt(a0);
        rep.add(n, std::abs(s[n]), rhs, {}, rad.violated);
    }
    return rep;
}

InequalityReport check_ineq7(const FaberSeries& s) {
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::ineq7, s);
    const double R2 = s.R() * s.R();
    double p = 1.0;
    for (int n = 1; 2 * n <= s.order(); ++n) {
        p *= R2;
        const double q = p * p;
        const double re2n = s[2 * n].real();
        const auto rad = clamp_radicand(a0 * a0 - q * re2n * re2n, a0 * a0);
        rep.add(n, std::abs(s[2 * n]), 2.0 / (1.0 - q) * std::sqrt(rad.value), {}, rad.violated);
    }
    return rep;
}

InequalityReport check_prop31(const FaberSeries& s) {
    require_prop31_regime(s.R());
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::prop31, s);
    double rn = 1.0;
    for (int n = 1; 2 * n <= s.order(); ++n) {
        rn *= s.R();
        const double p = rn * rn;
        const double q = p * p;
        const double lhs = std::abs(s[n]) * rn + std::abs(s[2 * n]) * p;
        const double rhs = 2.0 * a0 * rn / (1.0 - p) + 2.0 * a0 * p / (1.0 + q);
        rep.add(n, lhs, rhs);
    }
    return rep;
}

InequalityReport check_section4_main(const FaberSeries& s) {
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::section4_main, s);
    double q = 1.0;
    const double R4 = s.R() * s.R() * s.R() * s.R();
    for (int n = 1; 4 * n <= s.order(); ++n) {
        q *= R4;
        const double re2n = s[2 * n].real();
        const double lhs = re2n * re2n;
        const double opq = 1.0 + q;
        const double rhs = 4.0 * a0 * (1.0 + q * q) / (opq * opq * opq * opq) * (a0 + q * s[4 * n].real());
        rep.add(n, lhs, rhs);
    }
    return rep;
}

InequalityReport check_lemma44(const FaberSeries& s) {
    require_prop31_regime(s.R());
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::lemma44, s);
    CompensatedSum lhs;
    double rn = 1.0;
    for (int n = 1; n <= s.order(); ++n) {
        rn *= s.R();
        lhs += rn * std::abs(s[n]);
    }
    // The right side is an infinite sum of positive terms; its partial sum is a
    // lower bound, so comparing against it can only be stricter.
    const double S0 = s.R() == 0.0 ? 0.0 : series_general(s.R(), 1e-17).value;
    rep.add(s.order(), lhs.value(), 0.5 * a0 * S0);
    return rep;
}

InequalityReport check_real_sharpening(const FaberSeries& s) {
    const double a0 = positive_re_a0(s);
    auto rep = make_report(InequalityFamily::real_sharpening, s);
    const double R2 = s.R() * s.R();
    double p = 1.0;
    for (int n = 1; n <= s.order(); ++n) {
        p *= R2;
        rep.add(n, std::abs(s[n]), 2.0 * a0 / (1.0 + p));
    }
    return rep;
}

double G_function(double x, double a0, double R, int n) {
    const double rn = std::pow(R, n);
    const double p = rn * rn;
    const double q = p * p;
    return std::sqrt((1.0 + q) * a0 * (a0 + p * x)) + rn * std::sqrt(a0 * a0 - q * x * x);
}

GMaximum maximize_G(double a0, double R, int n) {
    if (!(a0 > 0.0)) throw DomainError("maximize_G: a0 must be > 0");
    if (n < 1) throw DomainError("maximize_G: n must be >= 1");
    if (!(R > 0.0 && R <= 1.0 / std::sqrt(5.0) * (1.0 + 1e-15))) {
        throw RangeError("maximize_G: R must satisfy 0 < R <= 1/sqrt(5)");
    }
    const double rn = std::pow(R, n);
    const double p = rn * rn;
    const double q = p * p;
    const double s = std::sqrt(1.0 + q);
    const double t = std::sqrt(1.0 + q + 16.0 * p);
    GMaximum g;
    g.right_endpoint = 2.0 * a0 / (1.0 + q);
    // (t - s)/(8q) rewritten as 2p/(q (t + s)) = 2/(p (t + s)) to avoid cancellation
    g.x2 = 2.0 * a0 * s / (p * (t + s));
    g.x1 = -a0 * s / (8.0 * q) * (t + s);
    g.x_star = std::min(g.x2, g.right_endpoint);
    g.value = G_function(g.x_star, a0, R, n);
    return g;
}

}  // namespace ebohr

#include "elliptic_bohr/radius.hpp"

#include <cmath>
#include <string>

#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/summation.hpp"

namespace ebohr {

namespace {

// Series precision used inside the solver: far below double resolution of the sum.
constexpr double kSolverSeriesTol = 1e-17;

template <class Term, class Tail>
SeriesEvaluation sum_with_tail(double R, double tol, Truncation trunc, Term term, Tail tail_after) {
    if (!(R >= 0.0)) throw DomainError("defining series: R must be >= 0");
    if (!(R < 1.0)) throw DivergenceError("defining series diverges for R >= 1");
    if (!(tol > 0.0)) throw DomainError("defining series: tol must be > 0");
    SeriesEvaluation ev;
    if (R == 0.0) return ev;
    CompensatedSum sum;
    double rn = 1.0;
    double r2n = 1.0;
    const double R2 = R * R;
    const int cap = trunc.is_adaptive() ? kMaxSeriesTerms : trunc.fixed_order;
    int n = 0;
    for (n = 1; n <= cap; ++n) {
        rn *= R;
        r2n *= R2;
        sum += term(n, rn, r2n);
        if (trunc.is_adaptive() && tail_after(n, rn) < 0.5 * tol) break;
    }
    if (n > cap) n = cap;
    ev.value = sum.value();
    ev.truncation_order = n;
    ev.tail_bound = tail_after(n, rn);
    if (trunc.is_adaptive() && !(ev.tail_bound < 0.5 * tol)) {
        throw DivergenceError("defining series: tail bound above tolerance after " +
                              std::to_string(kMaxSeriesTerms) + " terms at R = " + std::to_string(R));
    }
    return ev;
}

}  // namespace

std::string_view to_string(RadiusKind k) {
    return k == RadiusKind::real_coefficients ? "real_coefficients" : "general";
}

std::optional<RadiusKind> radius_kind_from_string(std::string_view name) {
    if (name == "real" || name == "real_coefficients") return RadiusKind::real_coefficients;
    if (name == "general") return RadiusKind::general;
    return std::nullopt;
}

SeriesEvaluation series_real(double R, double tol, Truncation trunc) {
    return sum_with_tail(
        R, tol, trunc, [](int, double rn, double r2n) { return 4.0 * rn / (1.0 + r2n); },
        [R](int, double rn) { return 4.0 * rn * R / (1.0 - R); });
}

SeriesEvaluation series_general(double R, double tol, Truncation trunc) {
    return sum_with_tail(
        R, tol, trunc,
        [](int n, double rn, double r2n) { return 4.0 * rn / (n % 2 == 0 ? 1.0 + r2n : 1.0 - r2n); },
        [R](int, double rn) { return 4.0 * rn * R / ((1.0 - R) * (1.0 - R * R)); });
}

SeriesEvaluation defining_series(RadiusKind kind, double R, double tol, Truncation trunc) {
    return kind == RadiusKind::real_coefficients ? series_real(R, tol, trunc) : series_general(R, tol, trunc);
}

RadiusSolution solve_radius(RadiusKind kind, double tol, const SolverOptions& opts) {
    if (!(tol >= 1e-14)) throw RangeError("solve_radius: tol must be >= 1e-14");
    auto eval = [&](double R) { return defining_series(kind, R, kSolverSeriesTol, opts.truncation); };
    double lo = opts.bracket_lo;
    double hi = opts.bracket_hi;
    if (!(lo > 0.0 && lo < hi && hi < 1.0)) throw RangeError("solve_radius: need 0 < lo < hi < 1");
    const auto elo = eval(lo);
    const auto ehi = eval(hi);
    if (!(elo.value + elo.tail_bound < 1.0) || !(ehi.value > 1.0)) {
        throw RangeError("solve_radius: initial bracket does not straddle the root");
    }
    RadiusSolution sol;
    sol.kind = kind;
    double value = 0.5 * (lo + hi);
    SeriesEvaluation ev = eval(value);
    double evaluated = value;
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        value = 0.5 * (lo + hi);
        if (value <= lo || value >= hi) {  // bracket down to adjacent doubles
            value = evaluated;
            break;
        }
        ev = eval(value);
        evaluated = value;
        const double residual = ev.value - 1.0;
        if (hi - lo < tol && std::fabs(residual) < tol) break;
        if (ev.value + ev.tail_bound < 1.0) {
            lo = value;
        } else if (ev.value > 1.0) {
            hi = value;
        } else {
            // 1 lies inside [partial sum, partial sum + tail]: undecidable at this truncation.
            if (ev.tail_bound > tol) {
                throw RangeError("solve_radius: truncation too coarse to locate the root");
            }
            break;
        }
    }
    sol.value = value;
    sol.bracket_lo = lo;
    sol.bracket_hi = hi;
    sol.truncation_order = ev.truncation_order;
    sol.tail_bound = ev.tail_bound;
    sol.residual = ev.value - 1.0;
    sol.iterations = it;
    return sol;
}

double rho_from_R(double R) {
    if (!(R > 0.0 && R < 1.0)) throw RangeError("rho_from_R: need 0 < R < 1");
    return 1.0 / R;
}

double R_from_rho(double rho) {
    if (!(rho > 1.0) || !std::isfinite(rho)) throw RangeError("R_from_rho: need rho > 1");
    return 1.0 / rho;
}

double bohr_sum(const FaberSeries& s, double r) {
    const double R = s.R();
    if (!(r >= R && r <= 1.0)) throw RangeError("bohr_sum: r must lie in [R, 1]");
    CompensatedSum sum;
    sum += std::abs(s[0]);
    for (int n = 1; n <= s.order(); ++n) sum += std::abs(s[n]) * faber_sup_norm(n, r, R);
    return sum.value();
}

BohrVerdict bohr_decision(const FaberSeries& s) {
    BohrVerdict v;
    v.sum = bohr_sum(s, s.R());
    v.bohr_holds = v.sum <= 1.0;
    return v;
}

double certified_max_modulus(const FaberSeries& s, double rel_tol) {
    int M = 8192;
    double prev = max_boundary_modulus(s, M);
    for (int i = 0; i < 4; ++i) {
        M *= 2;
        const double cur = max_boundary_modulus(s, M);
        if (std::fabs(cur - prev) <= rel_tol * cur) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace ebohr

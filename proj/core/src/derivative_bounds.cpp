#include "elliptic_bohr/derivative_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/summation.hpp"

namespace ebohr {

namespace {

double power(double R, long long e) { return std::pow(R, static_cast<double>(e)); }

// Constants of the quadratic h_n in deficit form:
//   h_n(x0 - q sigma) = H - c (2 x0 sigma - q sigma^2).
struct Stage {
    double q;   // R^{4n}
    double x0;  // 2 a0 / (1 + q)
    double c;   // (1+q)^4 / (4 a0 (1+q^2))
    double H;   // 2 a0 / (1 + q^2) = h_n(x0)
};

Stage make_stage(double a0, double R, long long n) {
    const double q = power(R, 4 * n);
    const double opq = 1.0 + q;
    return {q, 2.0 * a0 / opq, opq * opq * opq * opq / (4.0 * a0 * (1.0 + q * q)), 2.0 * a0 / (1.0 + q * q)};
}

// (g(u) - g(0)) / q^2 for the outer g of index with parameter q.
double psi_of_u(double u, double a0, double q) {
    const double q2 = q * q;
    return -2.0 * u * u / ((1.0 - q2) * (std::sqrt(a0 * a0 - q2 * u * u) + a0));
}

struct Scan {
    double min_value = std::numeric_limits<double>::infinity();
    double at_right = 0.0;  ///< derivative at the right end of the parameter interval
};

// Derivative of F on [0, L] sampled on an equispaced grid: central differences inside,
// second-order one-sided differences at both ends.
std::vector<double> derivative_grid(const std::function<double(double)>& F, double L,
                                    const DerivativeScanOptions& opts) {
    const int G = std::max(opts.grid_points, 3);
    const double h = opts.step_fraction * L;
    std::vector<double> d(static_cast<std::size_t>(G));
    for (int j = 0; j < G; ++j) {
        const double x = L * j / (G - 1);
        double v;
        if (j == 0) {
            v = (-3.0 * F(x) + 4.0 * F(x + h) - F(x + 2.0 * h)) / (2.0 * h);
        } else if (j == G - 1) {
            v = (3.0 * F(x) - 4.0 * F(x - h) + F(x - 2.0 * h)) / (2.0 * h);
        } else {
            v = (F(x + h) - F(x - h)) / (2.0 * h);
        }
        d[static_cast<std::size_t>(j)] = v;
    }
    return d;
}

InequalityReport make_report(double R, const DerivativeScanOptions& opts) {
    InequalityReport r;
    r.family = InequalityFamily::derivative_bounds;
    r.R = R;
    r.tolerance = opts.tolerance;
    return r;
}

void require_regime(double R, double a0) {
    if (!(R > 0.0 && R <= 0.5)) throw RangeError("derivative bounds require 0 < R <= 1/2");
    if (!(a0 > 0.0)) throw DomainError("derivative bounds require a0 > 0");
}

void append(InequalityReport& into, const InequalityReport& from) {
    for (const auto& e : from.entries) into.add(e.n, e.lhs, e.rhs, e.label, e.hypothesis_violated);
}

}  // namespace

double x0_of(double a0, double R, int n) { return 2.0 * a0 / (1.0 + power(R, 4LL * n)); }

double h_direct(double t, double a0, double R, int n) {
    const double q = power(R, 4LL * n);
    const double opq = 1.0 + q;
    return (t * t * opq * opq * opq * opq / (4.0 * a0 * (1.0 + q * q)) - a0) / q;
}

double g_direct(double u, double a0, double R, int n) {
    const double q2 = power(R, 8LL * n);
    return 2.0 / (1.0 - q2) * std::sqrt(a0 * a0 - q2 * u * u);
}

InequalityReport check_lemma41(int n, double R, double a0, const DerivativeScanOptions& opts) {
    require_regime(R, a0);
    if (n < 1) throw DomainError("check_lemma41: n must be >= 1");
    const Stage st = make_stage(a0, R, n);
    const double q = st.q;
    // t = x0 - q sigma; the zero x_1 of h_n sits at sigma_1.
    const double sigma1 = 2.0 * st.x0 / ((1.0 + q) * (1.0 + q + std::sqrt(1.0 + q * q)));
    auto psi = [&](double sigma) {
        const double u = st.H - st.c * (2.0 * st.x0 * sigma - q * sigma * sigma);
        return psi_of_u(u, a0, q);
    };
    // R^{4n} phi_n'(t) / R^{8n} = -psi'(sigma)
    const auto d = derivative_grid(psi, sigma1, opts);
    double vmin = std::numeric_limits<double>::infinity();
    for (double v : d) vmin = std::min(vmin, -v);
    auto rep = make_report(R, opts);
    rep.add(n, -8.0, vmin, "lemma41_bound");
    const double exact = -4.0 * (1.0 + q) / ((1.0 - q) * (1.0 - q) * (1.0 + q * q));
    rep.add(n, exact, vmin, "lemma41_exact");
    // phi_n is constant left of x_1; the right derivative there must vanish too.
    rep.add(n, std::fabs(-d.back()), opts.junction_tolerance, "c1_junction");
    return rep;
}

InequalityReport check_lemma42_chain(int n0, int k, double R, double a0, ChainBound bound,
                                     const DerivativeScanOptions& opts) {
    require_regime(R, a0);
    if (n0 < 1 || k < 0) throw DomainError("check_lemma42_chain: need n0 >= 1, k >= 0");
    std::vector<Stage> st;
    for (int j = 0; j <= k; ++j) st.push_back(make_stage(a0, R, (1LL << j) * n0));
    // S_j = prod_{i >= j} q_i; deficits of stage j are stored divided by S_j.
    std::vector<double> S(static_cast<std::size_t>(k) + 2, 1.0);
    for (int j = k; j >= 0; --j) S[static_cast<std::size_t>(j)] = st[static_cast<std::size_t>(j)].q * S[static_cast<std::size_t>(j) + 1];
    const Stage& last = st.back();
    auto deficit_out = [&](double tau) {
        double e = tau;
        for (int j = 0; j <= k; ++j) {
            const Stage& s = st[static_cast<std::size_t>(j)];
            e = s.c * (2.0 * s.x0 * e - S[static_cast<std::size_t>(j)] * e * e);
        }
        return e;
    };
    // x_1: invert the chain from the outermost stage inward, starting from h = 0.
    double e = last.H;
    for (int j = k; j >= 0; --j) {
        const Stage& s = st[static_cast<std::size_t>(j)];
        const double b = e / s.c;
        e = b / (s.x0 + std::sqrt(s.x0 * s.x0 - S[static_cast<std::size_t>(j)] * b));
    }
    const double tau1 = e;
    auto psi = [&](double tau) { return psi_of_u(last.H - deficit_out(tau), a0, last.q); };
    const auto d = derivative_grid(psi, tau1, opts);
    double vmin = std::numeric_limits<double>::infinity();
    for (double v : d) vmin = std::min(vmin, -v);
    // Units: R^{4 n0 (2^k + 1)}. The printed bound -2^{k+3} R^{8 n0 2^k} becomes
    // -2^{k+3} prod_{j<k} q_j in these units.
    double lhs = -std::ldexp(1.0, k + 3);
    if (bound == ChainBound::literal) {
        for (int j = 0; j < k; ++j) lhs *= st[static_cast<std::size_t>(j)].q;
    }
    auto rep = make_report(R, opts);
    rep.add((1 << k) * n0, lhs, vmin,
            (bound == ChainBound::literal ? "chain_literal_k" : "chain_k") + std::to_string(k));
    return rep;
}

InequalityReport check_lemma42_tail(int n0, double R) {
    if (!(R > 0.0 && R <= 0.5)) throw RangeError("tail bound requires 0 < R <= 1/2");
    if (n0 < 1) throw DomainError("check_lemma42_tail: n0 must be >= 1");
    // Units R^{8 n0}: sum_k 2^{k+3} R^{8 n0 (2^k - 1)}; corrected terms use R^{4 n0 (2^k - 1)}.
    CompensatedSum literal;
    CompensatedSum corrected;
    for (int k = 0; k < 60; ++k) {
        const double e = static_cast<double>(n0) * (std::ldexp(1.0, k) - 1.0);
        const double tl = std::ldexp(1.0, k + 3) * std::pow(R, 8.0 * e);
        const double tc = std::ldexp(1.0, k + 3) * std::pow(R, 4.0 * e);
        literal += tl;
        corrected += tc;
        if (tc < 1e-18) break;
    }
    InequalityReport rep;
    rep.family = InequalityFamily::derivative_bounds;
    rep.R = R;
    rep.tolerance = kDefaultInequalityTolerance;
    rep.add(n0, literal.value(), 8.0 / (1.0 - 2.0 * std::pow(R, 8.0 * n0 / 3.0)), "tail_geometric");
    rep.add(n0, literal.value(), 16.0, "tail_16");
    rep.add(n0, corrected.value(), 16.0, "corrected_tail_16");
    return rep;
}

InequalityReport check_lemma43(int n, double R, double a0, const DerivativeScanOptions& opts) {
    require_regime(R, a0);
    if (n < 1) throw DomainError("check_lemma43: n must be >= 1");
    const double rn = power(R, n);
    const double p = rn * rn;
    const double q = p * p;
    const double r3n = p * rn;
    const double A = a0 * (1.0 + q);
    const double x0 = 2.0 * a0 / (1.0 + q);
    // (G(x) - G(0)) / R^{2n}
    auto Gt = [&](double x) {
        return A * x / (std::sqrt(A * (a0 + p * x)) + std::sqrt(A * a0)) -
               r3n * x * x / (std::sqrt(a0 * a0 - q * x * x) + a0);
    };
    const auto d = derivative_grid(Gt, x0, opts);
    double vmin = std::numeric_limits<double>::infinity();
    for (double v : d) vmin = std::min(vmin, 2.0 * v / (1.0 - q));  // f_n' / R^{3n}
    auto rep = make_report(R, opts);
    rep.add(n, 0.25, vmin, "lemma43_bound");
    // theta_n'(x0) / R^{2n} in closed form against the one-sided difference.
    const double closed = (1.0 - p - 4.0 * r3n + q - r3n * r3n) / (1.0 - q);
    rep.add(n, std::fabs(2.0 * d.back() - closed), 1e-6, "theta_prime_x0");
    rep.add(n, 0.25, closed, "theta_prime_x0_quarter");
    return rep;
}

InequalityReport check_lemma41_42_43(int n0, int k_max, double R, double a0,
                                     const DerivativeScanOptions& opts) {
    require_regime(R, a0);
    if (n0 < 1 || n0 % 2 == 0) throw HypothesisError("chain start n0 must be a positive odd integer");
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    auto rep = make_report(R, opts);
    for (int j = 0; j <= k_max; ++j) {
        append(rep, check_lemma41((1 << j) * n0, R, a0, opts));
        append(rep, check_lemma42_chain(n0, j, R, a0, ChainBound::corrected, opts));
    }
    append(rep, check_lemma42_tail(n0, R));
    append(rep, check_lemma43(n0, R, a0, opts));
    return rep;
}

double G_prime_at_x2(double a0, double R, int n) {
    const double rn = power(R, n);
    const double p = rn * rn;
    const double q = p * p;
    const double A = a0 * (1.0 + q);
    const double s = std::sqrt(1.0 + q);
    const double t = std::sqrt(1.0 + q + 16.0 * p);
    // d = a0 - R^{2n} x; at x_2 this is 16 a0 p / (t + s)^2.
    const double d2 = 16.0 * a0 * p / ((t + s) * (t + s));
    const double sqA = std::sqrt(A);
    const double s2a = std::sqrt(2.0 * a0);
    auto Gd = [&](double d) {
        return -sqA * d / (std::sqrt(2.0 * a0 - d) + s2a) + rn * std::sqrt(d * (2.0 * a0 - d));
    };
    const double h = 1e-6 * d2;
    const double D1 = (Gd(d2 + h) - Gd(d2 - h)) / (2.0 * h);
    const double D2 = (Gd(d2 + 0.5 * h) - Gd(d2 - 0.5 * h)) / h;
    const double dGdd = (4.0 * D2 - D1) / 3.0;
    return -p * dGdd;
}

}  // namespace ebohr

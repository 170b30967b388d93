#include "elliptic_bohr/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/summation.hpp"

namespace ebohr {

namespace {

constexpr cplx kI{0.0, 1.0};

// sum_{n>=1} u^n, sum over even n >= 2, sum over odd n
cplx geo(cplx u) { return u / (1.0 - u); }
cplx geo_even(cplx u) { return u * u / (1.0 - u * u); }
cplx geo_odd(cplx u) { return u / (1.0 - u * u); }
double geo(double u) { return u / (1.0 - u); }
double geo_even(double u) { return u * u / (1.0 - u * u); }
double geo_odd(double u) { return u / (1.0 - u * u); }

// i^n for n >= 0
cplx i_pow(int n) {
    switch (n % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void require_r(double r, double R) {
    if (!(R >= 0.0 && R < 1.0)) throw RangeError("extremal: R must satisfy 0 <= R < 1");
    if (!(r > R && r < 1.0)) throw RangeError("extremal: r must satisfy R < r < 1");
}

void require_z(cplx z, double r, double R) {
    const double m = std::abs(z);
    if (!(m > R && m * r < 1.0)) throw RangeError("extremal: need R < |z| < 1/r");
}

// Correction terms carry a factor R^{2n} (from 1 - 1/(1 +- x)^2 or x/(1 +- x)), so with
// w = r max(1,|z|) R^2 every term is below 12 w^n / (1-R^2)^2.
double correction_tail(double w, double R, int N) {
    const double d = 1.0 - R * R;
    return 12.0 * std::pow(w, N + 1) / ((1.0 - w) * d * d);
}

template <class Term>
cplx sum_corrections(double w, double R, double tol, Term term) {
    CompensatedComplexSum acc;
    if (R == 0.0) return {0.0, 0.0};
    for (int n = 1; n <= kMaxSeriesTerms; ++n) {
        acc += term(n);
        if (correction_tail(w, R, n) < 0.5 * tol) return acc.value();
    }
    throw DivergenceError("extremal: correction series did not reach tolerance");
}

struct Powers {
    double rn, sn, x;  // r^n, (R^2/r)^n, R^{2n}
};

Powers powers(int n, double r, double s, double R) {
    return {std::pow(r, n), std::pow(s, n), std::pow(R, 2 * n)};
}

double normalizer_correction(ExtremalFamily fam, double r, double R, double tol) {
    if (R == 0.0) return 0.0;
    const double s = R * R / r;
    const double w = r * R * R;
    CompensatedSum acc;
    for (int n = 1; n <= kMaxSeriesTerms; ++n) {
        const Powers p = powers(n, r, s, R);
        if (fam == ExtremalFamily::phi1 || n % 2 == 0) {
            acc += -(p.rn + p.sn) * p.x / (1.0 + p.x);
        } else {
            acc += (p.rn - p.sn) * p.x / (1.0 - p.x);
        }
        if (correction_tail(w, R, n) < 0.5 * tol) return acc.value();
    }
    throw DivergenceError("extremal: normalizer series did not reach tolerance");
}

}  // namespace

std::string_view to_string(ExtremalFamily f) { return f == ExtremalFamily::phi1 ? "phi1" : "phi2"; }

std::optional<ExtremalFamily> extremal_family_from_string(std::string_view name) {
    if (name == "phi1") return ExtremalFamily::phi1;
    if (name == "phi2") return ExtremalFamily::phi2;
    return std::nullopt;
}

double epsilon1(double r, double R, double tol) {
    require_r(r, R);
    const double s = R * R / r;
    return geo(s) + normalizer_correction(ExtremalFamily::phi1, r, R, tol);
}

double epsilon2(double r, double R, double tol) {
    require_r(r, R);
    const double s = R * R / r;
    return geo_even(s) - geo_odd(s) + normalizer_correction(ExtremalFamily::phi2, r, R, tol);
}

double gamma_factor(double r, double R, double tol) { return r / (1.0 - r) + epsilon1(r, R, tol); }

double theta_factor(double r, double R, double tol) { return r / (1.0 - r) + epsilon2(r, R, tol); }

ExtremalParts extremal_parts(ExtremalFamily fam, double r, cplx z, double R, double tol) {
    require_r(r, R);
    require_z(z, r, R);
    const double s = R * R / r;
    const double R2 = R * R;
    const double w = r * std::max(1.0, std::abs(z)) * R2;
    ExtremalParts parts;
    if (fam == ExtremalFamily::phi1) {
        parts.singular = geo(r * z);
        const cplx closed = geo(r * R2 / z) + geo(s * z) + geo(s * R2 / z);
        const cplx corr = sum_corrections(w, R, tol, [&](int n) {
            const Powers p = powers(n, r, s, R);
            const double k = (2.0 * p.x + p.x * p.x) / ((1.0 + p.x) * (1.0 + p.x));
            return -(p.rn + p.sn) * faber_eval(n, z, R) * k;
        });
        parts.regular = closed + corr;
        parts.normalizer = gamma_factor(r, R, tol);
    } else {
        const cplx u = kI * r * z;
        parts.singular = -u / (1.0 + u);  // sum_{even} u^n - sum_{odd} u^n
        const cplx v = kI * s * z;
        const cplx w1 = kI * r * R2 / z;
        const cplx w2 = kI * s * R2 / z;
        const cplx closed = (geo_even(v) + geo_odd(v)) + (geo_even(w1) - geo_odd(w1)) + (geo_even(w2) + geo_odd(w2));
        const cplx corr = sum_corrections(w, R, tol, [&](int n) {
            const Powers p = powers(n, r, s, R);
            const cplx F = faber_eval(n, z, R);
            if (n % 2 == 0) {
                const double k = (2.0 * p.x + p.x * p.x) / ((1.0 + p.x) * (1.0 + p.x));
                return -i_pow(n) * (p.rn + p.sn) * F * k;
            }
            const double k = (2.0 * p.x - p.x * p.x) / ((1.0 - p.x) * (1.0 - p.x));
            return -i_pow(n) * (p.rn - p.sn) * F * k;
        });
        parts.regular = closed + corr;
        parts.normalizer = theta_factor(r, R, tol);
    }
    return parts;
}

cplx phi_eval(ExtremalFamily fam, double r, cplx z, double R, double tol) {
    const ExtremalParts p = extremal_parts(fam, r, z, R, tol);
    return -r + (1.0 + r) * (p.singular + p.regular) / p.normalizer;
}

cplx phi1_eval(double r, cplx z, double R, double tol) { return phi_eval(ExtremalFamily::phi1, r, z, R, tol); }

cplx phi2_eval(double r, cplx z, double R, double tol) { return phi_eval(ExtremalFamily::phi2, r, z, R, tol); }

cplx argmax_on_circle(ExtremalFamily fam, double r, double R) {
    require_r(r, R);
    constexpr int kGrid = 4096;
    constexpr double kTie = 1e-15;
    auto mod = [&](double t) { return std::abs(phi_eval(fam, r, std::polar(1.0, t), R)); };
    std::vector<double> v(kGrid);
    double vmax = -1.0;
    for (int j = 0; j < kGrid; ++j) {
        v[static_cast<std::size_t>(j)] = mod(2.0 * kPi * j / kGrid);
        vmax = std::max(vmax, v[static_cast<std::size_t>(j)]);
    }
    int jbest = 0;
    while (v[static_cast<std::size_t>(jbest)] < vmax * (1.0 - kTie)) ++jbest;
    const double step = 2.0 * kPi / kGrid;
    const double tgrid = step * jbest;

    // golden section on [t - step, t + step]
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = tgrid - step;
    double b = tgrid + step;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = mod(c);
    double fd = mod(d);
    while (b - a > 1e-12) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = mod(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = mod(d);
        }
    }
    double t = 0.5 * (a + b);
    // A flat modulus (R = 0, phi1) gives no real improvement; keep the grid point then.
    if (!(mod(t) > v[static_cast<std::size_t>(jbest)] * (1.0 + kTie))) t = tgrid;
    t = std::fmod(t, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return std::polar(1.0, t);
}

FaberSeries extremal_faber_series(ExtremalFamily fam, double r, double R, int N) {
    require_r(r, R);
    if (N < 0) throw DomainError("extremal_faber_series: N must be >= 0");
    const double s = R * R / r;
    const double norm = fam == ExtremalFamily::phi1 ? gamma_factor(r, R) : theta_factor(r, R);
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
    c[0] = -r;
    for (int n = 1; n <= N; ++n) {
        const Powers p = powers(n, r, s, R);
        cplx coef;
        if (fam == ExtremalFamily::phi1) {
            coef = (p.rn + p.sn) / ((1.0 + p.x) * (1.0 + p.x));
        } else if (n % 2 == 0) {
            coef = i_pow(n) * (p.rn + p.sn) / ((1.0 + p.x) * (1.0 + p.x));
        } else {
            coef = -i_pow(n) * (p.rn - p.sn) / ((1.0 - p.x) * (1.0 - p.x));
        }
        c[static_cast<std::size_t>(n)] = (1.0 + r) / norm * coef;
    }
    return FaberSeries(R, std::move(c));
}

double normalized_bohr_sum(ExtremalFamily fam, double r, cplx z, double R, double tol) {
    require_r(r, R);
    const double s = R * R / r;
    const double norm = fam == ExtremalFamily::phi1 ? gamma_factor(r, R, tol) : theta_factor(r, R, tol);
    CompensatedSum acc;
    if (R > 0.0) {
        const double d = 1.0 - R * R;
        for (int n = 1; n <= kMaxSeriesTerms; ++n) {
            const Powers p = powers(n, r, s, R);
            const double mag = (fam == ExtremalFamily::phi1 || n % 2 == 0)
                                   ? (p.rn + p.sn) / ((1.0 + p.x) * (1.0 + p.x))
                                   : (p.rn - p.sn) / ((1.0 - p.x) * (1.0 - p.x));
            acc += mag * 2.0 * std::pow(R, n);
            const double w = r * R;
            if (4.0 * std::pow(w, n + 1) / ((1.0 - w) * d * d) < 0.5 * tol) break;
        }
    }
    const double phi_mod = std::abs(phi_eval(fam, r, z, R, tol));
    return (r + (1.0 + r) / norm * acc.value()) / phi_mod;
}

ExtremalTrace prop51_trace(ExtremalFamily fam, double R, int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min || k_max > 40) throw RangeError("prop51_trace: need 1 <= k_min <= k_max <= 40");
    if (!(R >= 0.0 && R < 1.0 - std::ldexp(1.0, -k_min))) throw RangeError("prop51_trace: need R < 1 - 2^{-k_min}");
    ExtremalTrace tr;
    tr.family = fam;
    tr.R = R;
    for (int k = k_min; k <= k_max; ++k) {
        ExtremalStep st;
        st.k = k;
        st.r = 1.0 - std::ldexp(1.0, -k);
        st.z = argmax_on_circle(fam, st.r, R);
        const ExtremalParts parts = extremal_parts(fam, st.r, st.z, R, kDefaultSeriesTol);
        const cplx phi = -st.r + (1.0 + st.r) * (parts.singular + parts.regular) / parts.normalizer;
        st.sup_value = std::abs(phi);
        st.metric = (st.sup_value - 1.0) * (st.sup_value + 1.0) / (1.0 - st.r);
        st.alpha_or_beta = parts.regular.real();
        st.epsilon = fam == ExtremalFamily::phi1 ? epsilon1(st.r, R) : epsilon2(st.r, R);
        st.partial_modulus = std::abs(parts.singular + parts.regular);
        st.bohr_sum_normalized = normalized_bohr_sum(fam, st.r, st.z, R);
        tr.steps.push_back(st);
    }
    return tr;
}

InequalityReport lemma52_53_check(double R, int k_min, int k_max, const Lemma5Thresholds& th) {
    if (k_max < k_min + 1) throw RangeError("lemma52_53_check: need at least two steps");
    InequalityReport rep;
    rep.family = InequalityFamily::lemma52_53;
    rep.R = R;
    rep.tolerance = kDefaultInequalityTolerance;
    for (ExtremalFamily fam : {ExtremalFamily::phi1, ExtremalFamily::phi2}) {
        const ExtremalTrace tr = prop51_trace(fam, R, k_min, k_max);
        const std::string tag(to_string(fam));
        const ExtremalStep& first = tr.steps.front();
        const ExtremalStep& last = tr.steps.back();
        rep.add(k_max, std::fabs(last.epsilon), std::fabs(first.epsilon), tag + "_epsilon_decrease");
        rep.add(k_max, std::fabs(last.epsilon), th.final_value, tag + "_epsilon_final");
        rep.add(k_max, std::fabs(last.alpha_or_beta), std::fabs(first.alpha_or_beta), tag + "_regular_decrease");
        rep.add(k_max, std::fabs(last.alpha_or_beta), th.final_value, tag + "_regular_final");
        // The partial sums blow up only when z_k runs into the pole of the singular part.
        const cplx target = fam == ExtremalFamily::phi1 ? cplx{1.0, 0.0} : kI;
        const double d_first = std::abs(first.z - target);
        const double d_last = std::abs(last.z - target);
        const bool approaches = d_last < 0.05 && d_last < d_first;
        if (!approaches) {
            double early = 0.0;
            double overall = 0.0;
            for (std::size_t i = 0; i < tr.steps.size(); ++i) {
                if (i < 4) early = std::max(early, tr.steps[i].partial_modulus);
                overall = std::max(overall, tr.steps[i].partial_modulus);
            }
            rep.add(k_max, overall, th.cap_factor * early, tag + "_partial_sum_bounded");
        }
    }
    return rep;
}

OptimalityVerdict optimality_witness(RadiusKind kind, double R, double tol) {
    if (!(R > 0.0 && R < 1.0)) throw RangeError("optimality_witness: need 0 < R < 1");
    if (!(tol > 0.0)) throw DomainError("optimality_witness: tol must be > 0");
    const double R2 = R * R;
    auto limiting_sum = [&](double r1) {
        CompensatedSum acc;
        const double s1 = R2 / r1;
        for (int n = 1; n <= kMaxSeriesTerms; ++n) {
            const double x = std::pow(R, 2 * n);
            const double c = (kind == RadiusKind::general && n % 2 == 1) ? 1.0 / (1.0 - x) : 1.0 / (1.0 + x);
            acc += 2.0 * c * (std::pow(r1, n) + std::pow(s1, n));
            const double tail = 4.0 * std::pow(r1, n + 1) / ((1.0 - r1) * (1.0 - R2));
            if (tail < 0.25 * tol) return acc.value();
        }
        throw DivergenceError("optimality_witness: limiting series did not reach tolerance");
    };
    OptimalityVerdict v;
    v.kind = kind;
    v.R = R;
    v.infimum = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 64; ++j) {
        const double r1 = R + (1.0 - R) * std::ldexp(1.0, -j);
        v.infimum = std::min(v.infimum, limiting_sum(r1));
        ++v.grid_points;
    }
    v.infimum = std::min(v.infimum, limiting_sum(R));
    ++v.grid_points;
    v.series_value = defining_series(kind, R, 0.25 * tol).value;
    v.witnessed_failure = v.infimum > 1.0 + tol;
    v.consistent = std::fabs(v.infimum - v.series_value) <= 2.0 * tol;
    return v;
}

}  // namespace ebohr

#include "elliptic_bohr/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/summation.hpp"
#include "fft.hpp"

namespace ebohr {

namespace {

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

int next_power_of_two(int m) {
    int p = 1;
    while (p < m) p <<= 1;
    return p;
}

}  // namespace

FaberSeries::FaberSeries(double R, std::vector<cplx> coeffs) : R_(R), coeffs_(std::move(coeffs)) {
    if (!(R >= 0.0 && R < 1.0)) {
        throw RangeError("FaberSeries: R must satisfy 0 <= R < 1, got " + std::to_string(R));
    }
    if (coeffs_.empty()) throw DomainError("FaberSeries: at least a_0 is required");
    for (const cplx& a : coeffs_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("FaberSeries: non-finite coefficient");
        }
    }
}

FaberSeries FaberSeries::scaled(cplx factor) const {
    std::vector<cplx> c(coeffs_);
    for (cplx& a : c) a *= factor;
    return FaberSeries(R_, std::move(c));
}

cplx eval_series(const FaberSeries& s, cplx w) {
    const auto a = s.coefficients();
    const int N = s.order();
    if (N == 0) return a[0];
    if (w == cplx{0.0, 0.0}) throw DomainError("eval_series: w = 0 with N >= 1");
    // Horner in w for the polynomial part and in R^2/w for the principal part.
    const cplx v = (s.R() * s.R()) / w;
    cplx pos{0.0, 0.0};
    cplx neg{0.0, 0.0};
    for (int n = N; n >= 1; --n) {
        pos = (pos + a[n]) * w;
        neg = (neg + a[n]) * v;
    }
    return a[0] + pos + neg;
}

std::vector<cplx> boundary_values(const FaberSeries& s, int M) {
    if (M < 1) throw DomainError("boundary_values: M must be positive");
    const auto a = s.coefficients();
    const double R2 = s.R() * s.R();
    std::vector<cplx> spectrum(static_cast<std::size_t>(M), cplx{0.0, 0.0});
    spectrum[0] += a[0];
    double r2n = 1.0;
    for (int n = 1; n <= s.order(); ++n) {
        r2n *= R2;
        spectrum[static_cast<std::size_t>(n % M)] += a[n];
        spectrum[static_cast<std::size_t>((M - n % M) % M)] += a[n] * r2n;
    }
    detail::dft(spectrum, +1);
    return spectrum;
}

QuadratureGrid::QuadratureGrid(int M) : M_(M) {
    if (M < 4 || !is_power_of_two(M)) {
        throw DomainError("QuadratureGrid: node count must be a power of two >= 4, got " +
                          std::to_string(M));
    }
}

QuadratureGrid QuadratureGrid::for_order(int n_max) {
    return QuadratureGrid(next_power_of_two(std::max(256, 8 * std::max(n_max, 1))));
}

double QuadratureGrid::node(int j) const noexcept { return 2.0 * kPi * j / M_; }

FaberSeries extract_coefficients(const BoundaryFunction& f, int n_max, double R,
                                 const QuadratureGrid& grid) {
    if (n_max < 0) throw DomainError("extract_coefficients: n_max must be >= 0");
    const int M = grid.node_count();
    if (M < 4 * n_max) {
        throw AliasingError("extract_coefficients: " + std::to_string(M) + " nodes cannot resolve index " +
                            std::to_string(n_max) + " (need >= 4 n_max)");
    }
    std::vector<cplx> vals(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) vals[static_cast<std::size_t>(j)] = f(std::polar(1.0, grid.node(j)));
    detail::dft(vals, -1);
    // The positive frequencies of f on |w| = 1 are exactly a_n; R^{2n} a_n sits at -n.
    std::vector<cplx> coeffs(static_cast<std::size_t>(n_max) + 1);
    const double inv = 1.0 / M;
    for (int n = 0; n <= n_max; ++n) coeffs[static_cast<std::size_t>(n)] = vals[static_cast<std::size_t>(n)] * inv;
    return FaberSeries(R, std::move(coeffs));
}

FaberSeries extract_coefficients(const BoundaryFunction& f, int n_max, double R) {
    return extract_coefficients(f, n_max, R, QuadratureGrid::for_order(n_max));
}

double min_boundary_real_part(const FaberSeries& s, int M) {
    const auto vals = boundary_values(s, M);
    double m = std::numeric_limits<double>::infinity();
    for (const cplx& v : vals) m = std::min(m, v.real());
    return m;
}

double max_boundary_modulus(const FaberSeries& s, int M) {
    const auto vals = boundary_values(s, M);
    double m = 0.0;
    for (const cplx& v : vals) m = std::max(m, std::abs(v));
    return m;
}

namespace {

enum class Shape { unit_box, decaying, fejer_spikes, geometric };

// Fejer-kernel spikes: re f on |w| = 1 is a nonnegative combination of Fejer kernels,
// which pushes the coefficients toward the extremal configurations of the bounds.
std::vector<cplx> fejer_coefficients(std::mt19937_64& rng, double R, int n_max, bool real_only) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<double> angles;
    std::vector<double> weights;
    const int spikes = count(rng);
    for (int j = 0; j < spikes; ++j) {
        const double t = 2.0 * kPi * unit(rng);
        const double w = 0.05 + unit(rng);
        if (real_only) {
            angles.push_back(t);
            weights.push_back(0.5 * w);
            angles.push_back(-t);
            weights.push_back(0.5 * w);
        } else {
            angles.push_back(t);
            weights.push_back(w);
        }
    }
    std::vector<cplx> c(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
    double total = 0.0;
    for (double w : weights) total += w;
    c[0] = {total, real_only ? 0.0 : 2.0 * unit(rng) - 1.0};
    const double R2 = R * R;
    double r2k = 1.0;
    for (int k = 1; k <= n_max; ++k) {
        r2k *= R2;
        const double lambda = 2.0 * (1.0 - static_cast<double>(k) / (n_max + 1));
        double alpha = 0.0;
        double beta = 0.0;
        for (std::size_t j = 0; j < angles.size(); ++j) {
            alpha += weights[j] * lambda * std::cos(k * angles[j]);
            beta += weights[j] * lambda * std::sin(k * angles[j]);
        }
        const double x = alpha / (1.0 + r2k);
        const double y = real_only ? 0.0 : -beta / (1.0 - r2k);
        c[static_cast<std::size_t>(k)] = {x, y};
    }
    return c;
}

std::vector<cplx> random_coefficients(std::mt19937_64& rng, Shape shape, double R, int n_max,
                                      bool real_only) {
    if (shape == Shape::fejer_spikes) return fejer_coefficients(rng, R, n_max, real_only);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double decay = 1.0;
    if (shape == Shape::decaying) decay = 0.5 + 0.45 * unit(rng);
    if (shape == Shape::geometric) decay = 0.2 + 0.6 * unit(rng);
    std::vector<cplx> c(static_cast<std::size_t>(n_max) + 1);
    c[0] = {0.0, real_only ? 0.0 : box(rng)};
    double scale = 1.0;
    const double phase = 2.0 * kPi * unit(rng);
    for (int n = 1; n <= n_max; ++n) {
        scale *= decay;
        if (shape == Shape::geometric) {
            // smooth: one geometric mode with a fixed phase drift
            const double ph = real_only ? (std::cos(n * phase) >= 0.0 ? 0.0 : kPi) : n * phase;
            c[static_cast<std::size_t>(n)] = std::polar(scale, ph);
        } else {
            const double re = box(rng) * scale;
            const double im = real_only ? 0.0 : box(rng) * scale;
            c[static_cast<std::size_t>(n)] = {re, im};
        }
    }
    return c;
}

}  // namespace

FaberSeries generate_positive_real_part(std::uint64_t seed, double R, int n_max,
                                        const GeneratorOptions& opts) {
    if (!(R >= 0.0 && R < 1.0)) throw RangeError("generate_positive_real_part: R must satisfy 0 <= R < 1");
    if (n_max < 0) throw DomainError("generate_positive_real_part: n_max must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    const Shape shape = static_cast<Shape>(pick(rng));
    std::vector<cplx> base = random_coefficients(rng, shape, R, n_max, opts.real_coefficients);
    if (opts.real_coefficients)
        for (auto& x : base) x = {x.real(), 0.0};

    const int M = std::max(opts.boundary_samples, next_power_of_two(64 * std::max(n_max, 1)));
    double shrink = 1.0;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        std::vector<cplx> c(base);
        for (std::size_t n = 1; n < c.size(); ++n) c[n] *= shrink;
        FaberSeries trial(R, c);
        const double m = min_boundary_real_part(trial, M);
        const double delta = 0.01 * (1.0 + std::fabs(m));
        c[0] += cplx{delta - m, 0.0};
        FaberSeries shifted(R, std::move(c));
        if (min_boundary_real_part(shifted, 2 * M) >= 0.5 * delta && shifted[0].real() > 0.0) {
            return shifted;
        }
        shrink *= 0.5;
    }
    throw GeneratorError("generate_positive_real_part: positivity not certified for seed " +
                         std::to_string(seed));
}

}  // namespace ebohr

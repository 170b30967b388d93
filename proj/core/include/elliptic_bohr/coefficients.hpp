#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "elliptic_bohr/condenser.hpp"

namespace ebohr {

/// a_0 + sum_{n=1}^N a_n F_n(w) on the condenser of parameter R.
///
/// R = 0 is accepted so that classical (disc) limits can be expressed.
class FaberSeries {
public:
    /// Throws RangeError unless 0 <= R < 1, DomainError on a non-finite coefficient
    /// or an empty coefficient vector.
    FaberSeries(double R, std::vector<cplx> coeffs);

    [[nodiscard]] double R() const noexcept { return R_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const cplx> coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] cplx operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    [[nodiscard]] FaberSeries scaled(cplx factor) const;

private:
    double R_;
    std::vector<cplx> coeffs_;
};

cplx eval_series(const FaberSeries& s, cplx w);

/// Values of s at w_j = e^{2 pi i j / M}, j = 0..M-1.
std::vector<cplx> boundary_values(const FaberSeries& s, int M);

/// Trapezoid nodes theta_j = 2 pi j / M on the unit circle, M a power of two.
class QuadratureGrid {
public:
    /// Throws DomainError unless M is a power of two and M >= 4.
    explicit QuadratureGrid(int M);

    /// max(256, 8 n_max) rounded up to a power of two.
    static QuadratureGrid for_order(int n_max);

    [[nodiscard]] int node_count() const noexcept { return M_; }
    [[nodiscard]] double node(int j) const noexcept;
    [[nodiscard]] QuadratureGrid doubled() const { return QuadratureGrid(2 * M_); }

private:
    int M_;
};

using BoundaryFunction = std::function<cplx(cplx)>;

/// Coefficients of f in the Faber basis from its values on |w| = 1, using the
/// normalized measure d theta / 2 pi. Throws AliasingError if M < 4 n_max.
FaberSeries extract_coefficients(const BoundaryFunction& f, int n_max, double R,
                                 const QuadratureGrid& grid);
FaberSeries extract_coefficients(const BoundaryFunction& f, int n_max, double R);

struct GeneratorOptions {
    bool real_coefficients = false;
    int boundary_samples = 8192;
    int max_retries = 5;
};

/// Deterministic random series with re f > 0 on the closed ellipse.
///
/// Certified by sampling re f on |w| = 1 (harmonic, so the minimum is there),
/// shifting a_0 by -min + delta, then re-checking min >= delta/2 on the doubled grid.
FaberSeries generate_positive_real_part(std::uint64_t seed, double R, int n_max,
                                        const GeneratorOptions& opts = {});

/// Minimum of re s on |w| = 1 over M equispaced samples.
double min_boundary_real_part(const FaberSeries& s, int M);

/// Maximum of |s| on |w| = 1 over M equispaced samples.
double max_boundary_modulus(const FaberSeries& s, int M);

}  // namespace ebohr

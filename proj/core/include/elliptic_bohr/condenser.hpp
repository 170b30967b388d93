#pragma once

#include <complex>

namespace ebohr {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// The condenser ([-1,1], ellipse of level rho), parametrized by R = 1/rho.
class EllipticCondenser {
public:
    /// Throws RangeError unless 0 < R < 1.
    explicit EllipticCondenser(double R);
    static EllipticCondenser from_rho(double rho);

    [[nodiscard]] double R() const noexcept { return R_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }

private:
    double R_;
    double rho_;
};

/// (w + 1/w)/2. Throws DomainError at w = 0.
cplx zhukovskii(cplx w);

/// Inverse of zhukovskii with |w| >= 1. On the slit [-1,1] the root with
/// nonnegative imaginary part is returned.
cplx exterior_map(cplx z);

/// F_n(w) = w^n + R^{2n} w^{-n}, F_0 = 1. Requires 0 <= R < 1.
cplx faber_eval(int n, cplx w, double R);

/// Sup of |F_n| on |w| = r, namely r^n + R^{2n} r^{-n}, for R <= r <= 1.
double faber_sup_norm(int n, double r, double R);

/// Point of the level curve |Phi_E| = r in the z-plane: zhukovskii((r/R) e^{i theta}).
cplx boundary_point(double theta, double r, const EllipticCondenser& cond);

/// 2 rho / (1 + rho^2), for rho >= 1.
double eccentricity(double rho);

namespace detail {
/// z^n by repeated squaring; keeps the unit circle on the unit circle better than std::pow.
cplx ipow(cplx z, int n);
double ipow(double x, int n);
}  // namespace detail

}  // namespace ebohr

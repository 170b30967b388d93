#include "elliptic_bohr/condenser.hpp"

#include <cmath>
#include <string>

#include "elliptic_bohr/errors.hpp"

namespace ebohr {

namespace detail {

cplx ipow(cplx z, int n) {
    cplx result{1.0, 0.0};
    cplx base = z;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return n < 0 ? 1.0 / result : result;
}

double ipow(double x, int n) {
    double result = 1.0;
    double base = x;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return n < 0 ? 1.0 / result : result;
}

}  // namespace detail

EllipticCondenser::EllipticCondenser(double R) : R_(R), rho_(1.0 / R) {
    if (!(R > 0.0 && R < 1.0)) {
        throw RangeError("condenser parameter R must satisfy 0 < R < 1, got " + std::to_string(R));
    }
}

EllipticCondenser EllipticCondenser::from_rho(double rho) {
    if (!(rho > 1.0) || !std::isfinite(rho)) {
        throw RangeError("level rho must satisfy rho > 1, got " + std::to_string(rho));
    }
    EllipticCondenser c(1.0 / rho);
    c.rho_ = rho;
    return c;
}

cplx zhukovskii(cplx w) {
    if (w == cplx{0.0, 0.0}) throw DomainError("zhukovskii: w = 0");
    return 0.5 * (w + 1.0 / w);
}

cplx exterior_map(cplx z) {
    // sqrt(z-1) sqrt(z+1) is the branch of sqrt(z^2-1) that behaves like z at infinity,
    // so z + s lies outside the unit disc off the slit.
    const cplx s = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
    cplx w = z + s;
    const cplx other = z - s;
    const double mw = std::abs(w);
    const double mo = std::abs(other);
    if (mo > mw) {
        w = other;
    } else if (mo == mw && other.imag() > w.imag()) {
        w = other;
    }
    return w;
}

cplx faber_eval(int n, cplx w, double R) {
    if (n < 0) throw DomainError("faber_eval: negative index");
    if (!(R >= 0.0 && R < 1.0)) throw RangeError("faber_eval: R must satisfy 0 <= R < 1");
    if (n == 0) return {1.0, 0.0};
    if (w == cplx{0.0, 0.0}) throw DomainError("faber_eval: w = 0 with n >= 1");
    const cplx wn = detail::ipow(w, n);
    if (R == 0.0) return wn;
    return wn + detail::ipow(R * R, n) / wn;
}

double faber_sup_norm(int n, double r, double R) {
    if (n < 0) throw DomainError("faber_sup_norm: negative index");
    if (!(R >= 0.0 && R < 1.0)) throw RangeError("faber_sup_norm: R must satisfy 0 <= R < 1");
    if (!(r >= R && r <= 1.0)) throw RangeError("faber_sup_norm: r must lie in [R, 1]");
    if (n == 0) return 1.0;
    if (r == 0.0) return 0.0;
    return detail::ipow(r, n) + detail::ipow(R * R / r, n);
}

cplx boundary_point(double theta, double r, const EllipticCondenser& cond) {
    if (!(r >= cond.R())) throw RangeError("boundary_point: r must be >= R");
    const double m = r / cond.R();
    return zhukovskii(std::polar(m, theta));
}

double eccentricity(double rho) {
    if (!(rho >= 1.0)) throw RangeError("eccentricity: rho must be >= 1");
    return 2.0 * rho / (1.0 + rho * rho);
}

}  // namespace ebohr

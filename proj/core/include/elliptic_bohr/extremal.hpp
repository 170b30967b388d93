#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "elliptic_bohr/coefficients.hpp"
#include "elliptic_bohr/inequalities.hpp"
#include "elliptic_bohr/radius.hpp"

namespace ebohr {

enum class ExtremalFamily { phi1, phi2 };

std::string_view to_string(ExtremalFamily f);
std::optional<ExtremalFamily> extremal_family_from_string(std::string_view name);

inline constexpr double kDefaultSeriesTol = 1e-15;

// Evaluation splits each family into a closed-form geometric part and a
// correction series whose terms decay like R^{2n}, so the cost does not grow
// as r -> 1.

/// gamma(r) = sum_{n>=1} (r^n + R^{2n} r^{-n}) / (1 + R^{2n}), 0 <= R < r < 1.
double gamma_factor(double r, double R, double tol = kDefaultSeriesTol);

/// theta(r): even n (r^n + R^{2n} r^{-n})/(1+R^{2n}), odd n (r^n - R^{2n} r^{-n})/(1-R^{2n}).
double theta_factor(double r, double R, double tol = kDefaultSeriesTol);

/// gamma(r) - r/(1-r), computed without cancellation.
double epsilon1(double r, double R, double tol = kDefaultSeriesTol);
/// theta(r) - r/(1-r).
double epsilon2(double r, double R, double tol = kDefaultSeriesTol);

/// Pieces of phi(r, z) = -r + (1+r) (singular + regular) / normalizer.
struct ExtremalParts {
    cplx singular;   ///< sum r^n z^n, resp. sum_{even} (irz)^n - sum_{odd} (irz)^n
    cplx regular;    ///< the rest of the Faber sum (A + iB minus the singular part)
    double normalizer = 0.0;
};

ExtremalParts extremal_parts(ExtremalFamily fam, double r, cplx z, double R,
                             double tol = kDefaultSeriesTol);

/// Requires 0 <= R < r < 1 and R < |z|. Throws RangeError otherwise.
cplx phi1_eval(double r, cplx z, double R, double tol = kDefaultSeriesTol);
cplx phi2_eval(double r, cplx z, double R, double tol = kDefaultSeriesTol);
cplx phi_eval(ExtremalFamily fam, double r, cplx z, double R, double tol = kDefaultSeriesTol);

/// Point of |z| = 1 maximizing |phi(r, .)|: 4096-point scan, then golden section to
/// 1e-12 in angle. Near-ties (relative 1e-15) go to the smallest argument in [0, 2 pi).
cplx argmax_on_circle(ExtremalFamily fam, double r, double R);

/// Faber coefficients of phi(r, .) truncated at order N.
FaberSeries extremal_faber_series(ExtremalFamily fam, double r, double R, int N);

/// (r + (1+r)/normalizer * sum |c_n| 2 R^n) / |phi(r, z)|: the majorant sum on K of
/// phi/|phi(r,z)|, which is unit-bounded on the ellipse when z is the argmax.
double normalized_bohr_sum(ExtremalFamily fam, double r, cplx z, double R,
                           double tol = kDefaultSeriesTol);

struct ExtremalStep {
    int k = 0;
    double r = 0.0;
    cplx z;
    double sup_value = 0.0;
    double metric = 0.0;         ///< (|phi(r,z)|^2 - 1)/(1 - r)
    double alpha_or_beta = 0.0;  ///< re of the regular part at (r, z)
    double bohr_sum_normalized = 0.0;
    double epsilon = 0.0;        ///< normalizer - r/(1-r)
    double partial_modulus = 0.0;  ///< |A + iB| resp. |C + iD|
};

struct ExtremalTrace {
    ExtremalFamily family{};
    double R = 0.0;
    std::vector<ExtremalStep> steps;
};

/// r_k = 1 - 2^{-k}, k = k_min..k_max. Throws RangeError unless R < 1 - 2^{-k_min}.
ExtremalTrace prop51_trace(ExtremalFamily fam, double R, int k_min, int k_max);

struct Lemma5Thresholds {
    double final_value = 1e-3;  ///< |eps|, |alpha|, |beta| at k_max
    double cap_factor = 10.0;   ///< boundedness cap relative to the first 4 steps
};

/// For both families: |eps_i| and |alpha_k|, |beta_k| decrease from k_min to k_max and
/// end below the threshold; |A + iB| (|C + iD|) stays under the cap whenever the
/// argmax does not converge to the singular point.
InequalityReport lemma52_53_check(double R, int k_min, int k_max, const Lemma5Thresholds& th = {});

struct OptimalityVerdict {
    RadiusKind kind{};
    double R = 0.0;
    double infimum = 0.0;       ///< inf over the r_1 grid of the limiting left side
    double series_value = 0.0;  ///< defining series at R
    bool witnessed_failure = false;  ///< infimum > 1 + tol
    bool consistent = false;         ///< |infimum - series_value| <= 2 tol
    int grid_points = 0;
};

/// Limiting necessary condition sum 2 c_n (r_1^n + R^{2n} r_1^{-n}) <= 1 with c_n = 1/(1+R^{2n})
/// (real) or the parity split (general), evaluated on r_1 = R + (1-R) 2^{-j} -> R.
OptimalityVerdict optimality_witness(RadiusKind kind, double R, double tol);

}  // namespace ebohr

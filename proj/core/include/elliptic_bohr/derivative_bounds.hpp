#pragma once

#include "elliptic_bohr/inequalities.hpp"

namespace ebohr {

// Auxiliary functions of the fourth-order estimate, index n, q = R^{4n}:
//   g_n(u) = 2/(1-q^2) sqrt(a0^2 - q^2 u^2)
//   h_n(v) = (v^2 (1+q)^4 / (4 a0 (1+q^2)) - a0) / q
//   phi_n  = g_n o h_n past the zero x_1 of h_n, constant 2 a0/(1-q^2) before it
//   f_n(x) = 2 R^n/(1-q) G(x), theta_n = 2 G
// The scans work with deficits from the right endpoint and report values in
// scaled units, so nothing of size R^{8n} is ever formed by cancellation.

struct DerivativeScanOptions {
    int grid_points = 512;
    double step_fraction = 1e-6;  ///< finite-difference step relative to the interval
    double tolerance = 1e-7;
    double junction_tolerance = 1e-5;
};

/// x_0 for index n: 2 a0 / (1 + R^{4n}).
double x0_of(double a0, double R, int n);

/// h_n evaluated directly (no rescaling); for cross-checks at small n.
double h_direct(double t, double a0, double R, int n);
/// g_n evaluated directly; g_n(u) = 2/(1-R^{8n}) sqrt(a0^2 - R^{8n} u^2).
double g_direct(double u, double a0, double R, int n);

/// Single-step scan: R^{4n} phi_n' >= -8 R^{8n} (label "lemma41_bound"), the sharper
/// closed-form minimum at x_0 (label "lemma41_exact") and C^1 continuity at x_1
/// (label "c1_junction"). Entries are in units of R^{8n}.
InequalityReport check_lemma41(int n, double R, double a0, const DerivativeScanOptions& opts = {});

enum class ChainBound {
    literal,    ///< -2^{k+3} R^{8 n0 2^k} as printed
    corrected,  ///< -2^{k+3} R^{4 n0 (2^k + 1)}, what the chain rule actually yields
};

/// Composed chain phi_{2^k n0} = g o h_{2^k n0} o ... o h_{n0}. Entries in units of
/// R^{4 n0 (2^k+1)}; label "chain_k<k>".
InequalityReport check_lemma42_chain(int n0, int k, double R, double a0, ChainBound bound,
                                     const DerivativeScanOptions& opts = {});

/// Sum_k 2^{k+3} R^{8 n0 2^k} <= 16 R^{8 n0} and the same for the corrected bound.
/// Entries in units of R^{8 n0}.
InequalityReport check_lemma42_tail(int n0, double R);

/// f_n' >= R^{3n}/4 on [0, x_0] (label "lemma43_bound"), plus the closed form of
/// theta_n'(x_0) against finite differences (label "theta_prime_x0"). Units R^{3n}.
InequalityReport check_lemma43(int n, double R, double a0, const DerivativeScanOptions& opts = {});

/// Aggregate: single-step scans for n = 2^j n0, j = 0..k_max; corrected chain for
/// k = 0..k_max; tail; the f_n scan for n = n0. Throws RangeError if R > 1/2 or R <= 0,
/// HypothesisError if n0 is even or < 1, DomainError if a0 <= 0.
InequalityReport check_lemma41_42_43(int n0, int k_max, double R, double a0,
                                     const DerivativeScanOptions& opts = {});

/// dG/dx at the critical point x_2, by Richardson-extrapolated central differences in
/// the shifted variable d = a0 - R^{2n} x (G has a square-root singularity at d = 0).
double G_prime_at_x2(double a0, double R, int n);

}  // namespace ebohr

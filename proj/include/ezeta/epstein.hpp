#pragma once

#include <array>

#include "ezeta/types.hpp"

namespace ezeta {

/// Truncated lattice sum
///   (1/(2 zeta(2s))) sum_{(m,n) != 0, max(|m|,|n|) <= R} (Im z)^s / |m z + n|^{2s}.
/// err_estimate combines the integral-comparison tail bound
/// 8 y^s mu^{-2s} R^{2-2s} / (2s-2) (mu = min |u z + v| over the unit square
/// boundary) with the accumulated rounding of the positive-term sum.
EvalResult epstein_lattice_oracle(HalfPlanePoint z, int s, int radius);

/// Fourier-Bessel expansion of E(z, s) on the full modular group:
/// leading terms y^s + c_s y^{1-s} plus the K-Bessel cosine series.
/// n_max <= 0 selects the automatic truncation rule.
EvalResult epstein_fourier(HalfPlanePoint z, int s, long n_max = 0);

/// Exponentially convergent series for E(z, m+1) on the full modular group:
/// the same leading terms with the cosine series generated by the operator
/// (d/dy 1/y)^m acting on the Lambert-type sum.
EvalResult epstein_ramanujan_level1(HalfPlanePoint z, int m, long n_max = 0);

/// Level-4 series: the returned value is E^{Gamma0(4)}(-1/(4z), m+1),
/// evaluated from the alternating odd-frequency double sum at 2z+1.
EvalResult epstein_ramanujan_level4(HalfPlanePoint z, int m,
                                    const TruncationPolicy& policy = {});

/// Level-N value through the Moebius expansion over divisors of N.
/// Arguments N z / d are reduced into the fundamental domain before the
/// Fourier expansion is applied, so small Im z is admissible here.
EvalResult epstein_levelN(HalfPlanePoint z, int s, int level, long n_max = 0);

/// Residuals of the five algebraic relations tying levels 1, 2 and 4
/// together (half-period shift, the two level-2 addition forms, the level-1
/// splitting, and the two Moebius expansions), all through epstein_levelN.
std::array<double, 5> addition_formula_residuals(HalfPlanePoint z, int s);

/// Relative residual of (Im z)^2 (d_xx + d_yy) E = s(s-1) E with a
/// five-point stencil of spacing h, all evaluations by epstein_fourier.
double laplacian_eigencheck(HalfPlanePoint z, int s, double h);

} // namespace ezeta

#pragma once

// Internal extended-precision engine for the series evaluators.  The
// Fourier-Bessel and operator series carry intermediate terms up to ~1e7
// when Im z approaches 0.1 with s near 8; binary64 accumulation would lose
// the absolute accuracy the cross-method comparisons demand, so the series
// cores run in __float128 and only the results are rounded to double.

#include <quadmath.h>

#include <utility>

namespace ezeta::detail {

using qreal = __float128;

inline qreal q_pi() { return M_PIq; }
inline qreal q_abs(qreal x) { return x < 0 ? -x : x; }

qreal ipow_q(qreal b, long e);  // e >= 0

/// zeta(k), k >= 2: Bernoulli closed forms for even k <= 16, otherwise
/// direct summation with Euler-Maclaurin tail terms through B6.
qreal zeta_q(int k);

/// Dirichlet beta(s), s >= 1, by alternating-series acceleration.
qreal beta_q(int s);

/// sum_{d | n} d^{-k}
qreal sigma_neg_q(int k, long n);

/// Leading tail coefficient sqrt(pi) Gamma(s-1/2) zeta(2s-1) /
/// (Gamma(s) zeta(2s)) = pi binom(2s-2, s-1) 4^{1-s} zeta(2s-1)/zeta(2s).
qreal leading_coeff_q(int s);

struct SeriesOut {
    qreal value = 0;
    qreal tail = 0;  // bound on the dropped terms
    long work = 0;
};

/// Full-group Fourier-Bessel expansion at z = x + iy (no reduction).
/// n_max <= 0 picks the smallest truncation whose geometric tail bound
/// drops below 1e-33 of the result scale, capped at 5000 terms.
SeriesOut fourier_q(qreal x, qreal y, int s, long n_max = 0);

/// The cosine series part alone (value minus y^s - c_s y^{1-s}).
SeriesOut fourier_series_part_q(qreal x, qreal y, int s, long n_max = 0);

/// Operator-series evaluation of E(z, m+1) on the full group (no reduction).
SeriesOut ramanujan1_q(qreal x, qreal y, int m, long n_max = 0);

/// Exactly n_terms cosine terms of the level-1 series, for convergence fits.
qreal ramanujan1_partial_q(qreal x, qreal y, int m, long n_terms);

/// Level-4 series; returns E^{Gamma0(4)}(-1/(4z), m+1) for z = x + iy.
/// The (n, l) double sum stops once the termwise bound drops below term_cut.
SeriesOut ramanujan4_q(qreal x, qreal y, int m, qreal term_cut, long max_terms);

/// Translation/inversion reduction into |Re| <= 1/2, |z| >= 1.
void sl2z_reduce_q(qreal& x, qreal& y);

/// Fourier expansion after reduction; valid for any y > 0.
SeriesOut fourier_reduced_q(qreal x, qreal y, int s, long n_max = 0);

/// Moebius assembly of the level-N value from reduced level-1 evaluations.
SeriesOut level_n_q(qreal x, qreal y, int s, int level, long n_max = 0);

} // namespace ezeta::detail

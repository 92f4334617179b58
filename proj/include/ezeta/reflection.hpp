#pragma once

#include "ezeta/types.hpp"

namespace ezeta {

/// Both sides of a verified identity plus their distance.
struct ReflectionReport {
    cplx lhs{};
    cplx rhs{};
    double residual = 0.0;
    int m = 0;
    cplx z{};
};

/// The two-sided Lambert-series reflection
///   (z/i)^{-m} sum n^{-(2m+1)}/(e^{2 n pi z/i}-1)
///     - (-z/i)^m sum n^{-(2m+1)}/(e^{2 n pi i/z}-1)
///     = zeta(2m+2)/(2 pi) [(z/i)^{-(m+1)} + (-z/i)^{m+1}]
///       - zeta(2m+1)/2 [(z/i)^{-m} - (-z/i)^m]
///       + (1/pi) sum_{k<m} zeta(2k+2) zeta(2m-2k) (-1)^{-k} (z/i)^{2k+1-m}.
/// Powers are integer, hence single-valued.
ReflectionReport reflection_notebook(HalfPlanePoint z, int m,
                                     const TruncationPolicy& policy = {});

/// The odd-frequency alternating analogue with sums
/// sum (2n+1)^{-(2m+1)}/(e^{(2n+1) pi 2z/i}+1) at z and at -1/(4z).
ReflectionReport reflection_type2(HalfPlanePoint z, int m,
                                  const TruncationPolicy& policy = {});

/// sum 1/(n^2 sinh^2(n pi)) against 2G/3 - 11 pi^2/180.
ReflectionReport catalan_sinh_sum();

/// sum 1/((2n+1)^2 cosh^2((2n+1) pi/2)) against pi^2/16 - G/2.
ReflectionReport catalan_cosh_sum();

/// sum n^{-3}/(e^{2 n pi}-1) against 7 pi^3/360 - zeta(3)/2 (the m = 1,
/// z = i specialization of reflection_notebook).
ReflectionReport lambert_cube_sum();

} // namespace ezeta

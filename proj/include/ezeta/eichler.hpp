#pragma once

#include <vector>

#include "ezeta/quadrature.hpp"
#include "ezeta/reflection.hpp"
#include "ezeta/types.hpp"

namespace ezeta {

/// Per-s data of the segment-integral representation of
/// E^{Gamma0(4)}(-1/(4z), s): integer weight polynomial, prefactor
/// denominator D_s (the prefactor is P_s(t) / (D_s pi^{2s-1} (Im z)^{s-1})),
/// and the constant C_s = c_num/c_den * zeta(2s-1) / pi^{2s-1}.
struct Theorem2Entry {
    int s = 0;
    std::vector<long long> poly;  // coefficients of P_s(t), ascending
    long long pref_den = 1;       // D_s
    long long c_num = 0, c_den = 1;
};

/// Table rows exist for s in {2, 3, 4, 5, 7}.
const Theorem2Entry& theorem2_table(int s);

/// E^{Gamma0(4)}(-1/(4z), s) as C_s/(Im z)^{s-1} plus the real part of the
/// segment integral from 0 to lambda(2z+1).  Requires in_theorem2_region(z).
EvalResult theorem2_epstein(HalfPlanePoint z, int s, const QuadratureSpec& spec = {});

/// Weight polynomial of the zeta(2n+1) integral for n in {1,2,3,4,6},
/// plus n = 5 rows for the weight-10 pair below; exact integer coefficients.
std::vector<long long> odd_zeta_weight_poly(int n);

/// Ratio of the rational-coefficient [K(sqrt(1-t))]^{2n} integral to the
/// independently summed zeta(2n+1); n in {1, 2, 3, 4, 6}.
double odd_zeta_integral(int n, const QuadratureSpec& spec = {});

/// The four mixed-power vanishing integrals (idx 1..4); returns the value,
/// whose magnitude should vanish.
double vanishing_integral(int idx, const QuadratureSpec& spec = {});

/// int_0^1 [8 - 1049 t(1-t)] K(sqrt(t))^{10} dt, also vanishing.
double vanishing_integral_weight10(const QuadratureSpec& spec = {});

/// Ratio of the [2 - 259 t(1-t) + 1382 t^2(1-t)^2] K(sqrt(t))^{10} integral
/// to zeta(11).
double zeta11_integral(const QuadratureSpec& spec = {});

/// The five K-integral evaluations of E^{Gamma0(4)}((1+i)/4, s) against
/// their Catalan / odd-zeta / beta closed forms; s in {2, 3, 4, 5, 7}.
ReflectionReport catalan_k_integral(int s, const QuadratureSpec& spec = {});

/// Lambert series sum sigma_3(n) n^{-3} q^n against the weight-4 integral
/// (2 pi i)^3/480 int_z^{i inf} [1 - E4(zeta)] (zeta - z)^2 dzeta over the
/// vertical ray.  z = iy with y in [0.3, 3].
ReflectionReport eichler_e4_check(HalfPlanePoint z, const QuadratureSpec& spec = {});

/// The same integral through the substitution t = lambda(zeta) over
/// [0, lambda(z)]; used to cross-check the ray form.
cplx eichler_e4_integral_lambda(HalfPlanePoint z, const QuadratureSpec& spec = {});
cplx eichler_e4_integral_ray(HalfPlanePoint z, const QuadratureSpec& spec = {});

/// Residuals of the three series-equals-integral identities for the odd
/// Lambert sums (two segment forms over [0, lambda(z)] and [0, lambda(2z)],
/// and the alternating variant).  z = iy with y in [0.3, 2].
std::vector<double> elliptic_substitution_residuals(HalfPlanePoint z,
                                                    const QuadratureSpec& spec = {});

} // namespace ezeta

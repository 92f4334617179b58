#pragma once

#include "ezeta/types.hpp"

namespace ezeta {

/// Dedekind eta as the q-product e^{pi i z/12} prod (1 - q^n), truncated
/// once the dropped factors perturb the product by less than policy.tol.
/// Points with Im z < 0.05 are rejected rather than transformed.
cplx dedekind_eta(HalfPlanePoint z, const TruncationPolicy& policy = {});

/// Modular lambda as the eta quotient 16 eta(z/2)^8 eta(2z)^16 / eta(z)^24.
cplx modular_lambda(HalfPlanePoint z, const TruncationPolicy& policy = {});

/// Weight-4 Eisenstein series 1 + 240 sum sigma_3(n) q^n.
cplx eisenstein_e4(HalfPlanePoint z, const TruncationPolicy& policy = {});

/// Second evaluation path for E4: [2 K(sqrt(lambda))/pi]^4 (1 - lambda + lambda^2).
cplx eisenstein_e4_lambda_form(HalfPlanePoint z, const TruncationPolicy& policy = {});

/// Both sides of the two degree-2 modulus transformations of K, for
/// residual testing.  Requires lambda off (-inf, 0] and |lambda| < 1.
struct LandenCheck {
    cplx descend_lhs, descend_rhs;  // K(sqrt(1-lambda)) = 2/(1+sqrt(lambda)) K((1-sqrt l)/(1+sqrt l))
    cplx ascend_lhs, ascend_rhs;    // K(sqrt(lambda))   = 1/(1+sqrt(lambda)) K(2 l^{1/4}/(1+sqrt l))
};
LandenCheck landen_descend(cplx lambda);

/// |z - i K(sqrt(1-lambda(z))) / K(sqrt(lambda(z)))| on the fundamental
/// domain interior.
double lambda_k_inverse_check(HalfPlanePoint z);

/// Interior of the lambda-group fundamental domain:
/// |Re z| < 1, |z + 1/2| > 1/2, |z - 1/2| > 1/2 (all strict).
bool in_fundamental_domain(HalfPlanePoint z);

/// Region of validity of the segment-integral representations:
/// |Re(2z+1)| < 1, |2z + 1/2| > 1/2, |2z + 3/2| > 1/2, i.e. 2z+1 lies in
/// the fundamental domain interior.
bool in_theorem2_region(HalfPlanePoint z);

/// Residuals of the degree-2 lambda transformations
///   lambda(2z)  = [(1 - sqrt(1-lambda)) / (1 + sqrt(1-lambda))]^2
///   lambda(z/2) = 4 sqrt(lambda) / (1 + sqrt(lambda))^2.
struct Degree2Residuals {
    double doubled;  // lambda(2z) route
    double halved;   // lambda(z/2) route
};
Degree2Residuals degree2_lambda(HalfPlanePoint z);

} // namespace ezeta

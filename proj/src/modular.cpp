#include "ezeta/modular.hpp"

#include <cmath>

#include "ezeta/arithmetic.hpp"
#include "ezeta/special_functions.hpp"

namespace ezeta {

namespace {

cplx ipow(cplx b, int e)
{
    cplx r{1.0};
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

} // namespace

cplx dedekind_eta(HalfPlanePoint z, const TruncationPolicy& policy)
{
    if (z.im < 0.05)
        throw domain_error("dedekind_eta: Im z < 0.05 is outside the supported strip");
    const cplx iz{-z.im, z.re};  // i z
    const cplx q = std::exp(2.0 * M_PI * iz);
    const double qa = std::abs(q);
    const long n_top = (long)std::ceil(std::log(policy.tol / 16.0) / std::log(qa));
    if (n_top > policy.max_terms)
        throw truncation_error("dedekind_eta: q-product exceeds the term budget");
    cplx prod{1.0};
    cplx qn = q;
    for (long n = 1; n <= n_top; ++n) {
        prod *= (cplx(1.0) - qn);
        qn *= q;
    }
    return std::exp(M_PI * iz / 12.0) * prod;
}

cplx modular_lambda(HalfPlanePoint z, const TruncationPolicy& policy)
{
    const cplx zc = z.to_complex();
    const cplx half = dedekind_eta(HalfPlanePoint(0.5 * zc), policy);
    const cplx dbl = dedekind_eta(HalfPlanePoint(2.0 * zc), policy);
    const cplx one = dedekind_eta(z, policy);
    return 16.0 * ipow(half, 8) * ipow(dbl, 16) / ipow(one, 24);
}

cplx eisenstein_e4(HalfPlanePoint z, const TruncationPolicy& policy)
{
    const cplx iz{-z.im, z.re};
    const cplx q = std::exp(2.0 * M_PI * iz);
    const double qa = std::abs(q);
    cplx acc{1.0};
    cplx qn = q;
    for (long n = 1; n <= policy.max_terms; ++n) {
        acc += 240.0 * sigma_nu(3, n) * qn;
        // sigma_3(n) < 1.21 n^3
        if (290.0 * std::pow(double(n + 1), 3) * qa * std::abs(qn) < policy.tol) return acc;
        qn *= q;
    }
    throw truncation_error("eisenstein_e4: q-series exceeds the term budget");
}

cplx eisenstein_e4_lambda_form(HalfPlanePoint z, const TruncationPolicy& policy)
{
    const cplx lam = modular_lambda(z, policy);
    const cplx k = elliptic_k(lam);
    return ipow(2.0 * k / M_PI, 4) * (1.0 - lam + lam * lam);
}

LandenCheck landen_descend(cplx lambda)
{
    if (lambda.imag() == 0.0 && lambda.real() <= 0.0)
        throw domain_error("landen_descend: lambda on (-inf, 0]");
    if (std::abs(lambda) >= 1.0)
        throw domain_error("landen_descend: |lambda| >= 1");
    const cplx sq = std::sqrt(lambda);
    LandenCheck out;
    out.descend_lhs = elliptic_k(1.0 - lambda);
    const cplx k1 = (1.0 - sq) / (1.0 + sq);
    out.descend_rhs = 2.0 / (1.0 + sq) * elliptic_k(k1 * k1);
    out.ascend_lhs = elliptic_k(lambda);
    const cplx k2 = 2.0 * std::sqrt(sq) / (1.0 + sq);
    out.ascend_rhs = 1.0 / (1.0 + sq) * elliptic_k(k2 * k2);
    return out;
}

double lambda_k_inverse_check(HalfPlanePoint z)
{
    if (!in_fundamental_domain(z))
        throw domain_error("lambda_k_inverse_check: z outside the fundamental domain interior");
    const cplx lam = modular_lambda(z);
    const cplx ratio = cplx(0, 1) * elliptic_k(1.0 - lam) / elliptic_k(lam);
    return std::abs(z.to_complex() - ratio);
}

bool in_fundamental_domain(HalfPlanePoint z)
{
    const cplx zc = z.to_complex();
    return std::abs(z.re) < 1.0 && std::abs(zc + 0.5) > 0.5 && std::abs(zc - 0.5) > 0.5;
}

bool in_theorem2_region(HalfPlanePoint z)
{
    const cplx w = 2.0 * z.to_complex();
    return std::abs(w.real() + 1.0) < 1.0 && std::abs(w + 0.5) > 0.5 && std::abs(w + 1.5) > 0.5;
}

Degree2Residuals degree2_lambda(HalfPlanePoint z)
{
    if (!in_fundamental_domain(z))
        throw domain_error("degree2_lambda: z outside the fundamental domain interior");
    const cplx zc = z.to_complex();
    const cplx lam = modular_lambda(z);
    const cplx r1 = std::sqrt(1.0 - lam);
    const cplx pred_double = ipow((1.0 - r1) / (1.0 + r1), 2);
    const cplx r2 = std::sqrt(lam);
    const cplx pred_half = 4.0 * r2 / ipow(1.0 + r2, 2);
    return {std::abs(modular_lambda(HalfPlanePoint(2.0 * zc)) - pred_double),
            std::abs(modular_lambda(HalfPlanePoint(0.5 * zc)) - pred_half)};
}

} // namespace ezeta

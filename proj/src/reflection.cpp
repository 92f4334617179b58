#include "ezeta/reflection.hpp"

#include <cmath>

#include "ezeta/special_functions.hpp"

namespace ezeta {

namespace {

cplx ipow(cplx b, int e)
{
    if (e < 0) return 1.0 / ipow(b, -e);
    cplx r{1.0};
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// sum_{n>=1} n^{-(2m+1)} / (e^{2 n pi z/i} - 1); needs Re(z/i) = Im z > 0
cplx lambert_sum(cplx z, int m, const TruncationPolicy& policy)
{
    const cplx w0 = 2.0 * M_PI * (z / cplx(0.0, 1.0));
    if (w0.real() < 0.05 * 2.0 * M_PI)
        throw domain_error("reflection: mapped argument too close to the real axis");
    cplx acc{};
    for (long n = 1; n <= policy.max_terms; ++n) {
        const cplx w = double(n) * w0;
        if (w.real() > 42.0) return acc;  // remaining terms < e^{-42}
        acc += std::pow(double(n), -(2 * m + 1)) / (std::exp(w) - 1.0);
    }
    throw truncation_error("reflection: series budget exhausted");
}

// sum_{n>=0} (2n+1)^{-(2m+1)} / (e^{(2n+1) pi 2z/i} + 1)
cplx odd_alternating_sum(cplx z, int m, const TruncationPolicy& policy)
{
    const cplx w0 = M_PI * (2.0 * z / cplx(0.0, 1.0));
    if (w0.real() < 0.05 * M_PI)
        throw domain_error("reflection: mapped argument too close to the real axis");
    cplx acc{};
    for (long n = 0; n <= policy.max_terms; ++n) {
        const cplx w = double(2 * n + 1) * w0;
        if (w.real() > 42.0) return acc;
        acc += std::pow(double(2 * n + 1), -(2 * m + 1)) / (std::exp(w) + 1.0);
    }
    throw truncation_error("reflection: series budget exhausted");
}

} // namespace

ReflectionReport reflection_notebook(HalfPlanePoint z, int m, const TruncationPolicy& policy)
{
    if (m < 1) throw domain_error("reflection_notebook: m >= 1 required");
    const cplx zc = z.to_complex();
    const cplx a = zc / cplx(0.0, 1.0);   // z/i
    const cplx b = -a;                    // -z/i
    const cplx lhs =
        ipow(a, -m) * lambert_sum(zc, m, policy) - ipow(b, m) * lambert_sum(-1.0 / zc, m, policy);

    const auto& cc = ConstantsCache::get();
    cplx rhs = cc.zeta(2 * m + 2) / (2.0 * M_PI) * (ipow(a, -(m + 1)) + ipow(b, m + 1));
    rhs -= cc.zeta(2 * m + 1) / 2.0 * (ipow(a, -m) - ipow(b, m));
    cplx tail{};
    for (int k = 0; k <= m - 1; ++k) {
        const double sign = (k % 2) ? -1.0 : 1.0;
        tail += sign * cc.zeta(2 * k + 2) * cc.zeta(2 * m - 2 * k) * ipow(a, -(m - 2 * k - 1));
    }
    rhs += tail / M_PI;
    return {lhs, rhs, std::abs(lhs - rhs), m, zc};
}

ReflectionReport reflection_type2(HalfPlanePoint z, int m, const TruncationPolicy& policy)
{
    if (m < 1) throw domain_error("reflection_type2: m >= 1 required");
    const cplx zc = z.to_complex();
    const cplx a = 2.0 * zc / cplx(0.0, 1.0);  // 2z/i
    const cplx b = -a;
    const cplx lhs = ipow(a, -m) * odd_alternating_sum(zc, m, policy) -
                     ipow(b, m) * odd_alternating_sum(-1.0 / (4.0 * zc), m, policy);

    const auto& cc = ConstantsCache::get();
    cplx rhs = (1.0 - std::ldexp(1.0, -(2 * m + 1))) / 2.0 * cc.zeta(2 * m + 1) *
               (ipow(a, -m) - ipow(b, m));
    cplx tail{};
    for (int k = 0; k <= m - 1; ++k) {
        const double sign = (k % 2) ? -1.0 : 1.0;
        tail += sign * cc.zeta(2 * k + 2) * cc.zeta(2 * m - 2 * k) *
                (std::ldexp(1.0, -(2 * k + 2)) - 1.0) * (1.0 - std::ldexp(1.0, 2 * k - 2 * m)) *
                ipow(a, -(m - 2 * k - 1));
    }
    rhs += 2.0 * tail / M_PI;
    return {lhs, rhs, std::abs(lhs - rhs), m, zc};
}

ReflectionReport catalan_sinh_sum()
{
    double lhs = 0.0;
    for (int n = 1; n <= 25; ++n) {
        const double sh = std::sinh(n * M_PI);
        lhs += 1.0 / (double(n) * double(n) * sh * sh);
    }
    const double rhs = 2.0 * catalan() / 3.0 - 11.0 * M_PI * M_PI / 180.0;
    return {lhs, rhs, std::abs(lhs - rhs), 1, cplx(0.0, 1.0)};
}

ReflectionReport catalan_cosh_sum()
{
    double lhs = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const double odd = 2.0 * n + 1.0;
        const double ch = std::cosh(odd * M_PI / 2.0);
        lhs += 1.0 / (odd * odd * ch * ch);
    }
    const double rhs = M_PI * M_PI / 16.0 - catalan() / 2.0;
    return {lhs, rhs, std::abs(lhs - rhs), 1, cplx(0.0, 0.5)};
}

ReflectionReport lambert_cube_sum()
{
    double lhs = 0.0;
    for (int n = 1; n <= 20; ++n)
        lhs += 1.0 / (double(n) * double(n) * double(n) * std::expm1(2.0 * M_PI * n));
    const double rhs = 7.0 * M_PI * M_PI * M_PI / 360.0 - zeta_int(3) / 2.0;
    return {lhs, rhs, std::abs(lhs - rhs), 1, cplx(0.0, 1.0)};
}

} // namespace ezeta

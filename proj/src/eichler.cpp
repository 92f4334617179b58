#include "ezeta/eichler.hpp"

#include <cmath>
#include <map>

#include "ezeta/arithmetic.hpp"
#include "ezeta/modular.hpp"
#include "ezeta/special_functions.hpp"

namespace ezeta {

namespace {

using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_scale(Poly p, long long c)
{
    for (auto& v : p) v *= c;
    return p;
}

template <class T>
T polyval(const Poly& p, T t)
{
    T acc{};
    for (size_t i = p.size(); i-- > 0;) acc = acc * t + T(double(p[i]));
    return acc;
}

// t(1-t) and t^2(1-t)^2 as integer polynomials
const Poly kU{0, 1, -1};
const Poly kU2 = poly_mul(kU, kU);

Poly affine(long long a, long long b)  // a + b u(t) + ...
{
    Poly p = poly_scale(kU, b);
    p[0] += a;
    return p;
}

Poly two_t_minus_1() { return Poly{-1, 2}; }

// weight cores shared by the segment representation and the K-integral
// families; the leading integers live in the printed prefactors.
Poly core_poly(int s)
{
    switch (s) {
        case 2: return Poly{1};
        case 3: return two_t_minus_1();
        case 4: return affine(2, -17);
        case 5: return poly_mul(two_t_minus_1(), affine(1, -31));
        case 7: {
            Poly q = affine(1, -512);
            const Poly u2 = poly_scale(kU2, 5461);
            q.resize(5, 0);
            for (size_t i = 0; i < u2.size(); ++i) q[i] += u2[i];
            return poly_mul(two_t_minus_1(), q);
        }
    }
    throw domain_error("core_poly: s must be one of {2,3,4,5,7}");
}

// real arithmetic-geometric mean for positive arguments
double agm_pos(double a, double b)
{
    for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

// K(sqrt(1-w)) given the complement w > 0; endpoint-accurate for tiny w
double k_from_complement(double w) { return M_PI / (2.0 * agm_pos(1.0, std::sqrt(w))); }

double ipow_d(double b, int e)
{
    double r = 1.0;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

cplx ipow_c(cplx b, int e)
{
    cplx r{1.0};
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

long long leading_int(int s)
{
    switch (s) {
        case 2: return 3;
        case 3: return 15;
        case 4: return 70;
        case 5: return 315;
        case 7: return 3003;
    }
    throw domain_error("leading_int: bad s");
}

} // namespace

const Theorem2Entry& theorem2_table(int s)
{
    static const std::map<int, Theorem2Entry> table = [] {
        std::map<int, Theorem2Entry> t;
        const long long dens[] = {4, 32, 1088, 15872, 22368256};
        const long long cn[] = {21, 1395, 200025, 50703975, 11506129710075LL};
        const long long cd[] = {8, 256, 17408, 2031616, 91620376576LL};
        const int ss[] = {2, 3, 4, 5, 7};
        for (int i = 0; i < 5; ++i) {
            Theorem2Entry e;
            e.s = ss[i];
            e.poly = poly_scale(core_poly(ss[i]), leading_int(ss[i]));
            e.pref_den = dens[i];
            e.c_num = cn[i];
            e.c_den = cd[i];
            t[ss[i]] = e;
        }
        return t;
    }();
    auto it = table.find(s);
    if (it == table.end()) throw domain_error("theorem2_table: s must be one of {2,3,4,5,7}");
    return it->second;
}

EvalResult theorem2_epstein(HalfPlanePoint z, int s, const QuadratureSpec& spec)
{
    if (!in_theorem2_region(z)) throw domain_error("theorem2_epstein: z outside the region");
    const Theorem2Entry& e = theorem2_table(s);
    const cplx zc = z.to_complex();
    const cplx w  = 2.0 * zc + 1.0;
    const cplx wb = 2.0 * std::conj(zc) + 1.0;
    const cplx lambda_end = modular_lambda(HalfPlanePoint(w));

    auto integrand = [&](cplx t) {
        const cplx kt = elliptic_k(t);
        const cplx ratio = cplx(0, 1) * elliptic_k(1.0 - t) / kt;
        return polyval(e.poly, t) * ipow_c(kt, 2 * (s - 1)) * ipow_c(ratio - w, s - 1) *
               ipow_c(ratio - wb, s - 1);
    };
    const QuadOutcome q = quad_segment(integrand, lambda_end, spec);
    const double ys = ipow_d(z.im, s - 1);
    const double denom = double(e.pref_den) * ipow_d(M_PI, 2 * s - 1) * ys;
    const double constant =
        double(e.c_num) / double(e.c_den) * zeta_int(2 * s - 1) / (ipow_d(M_PI, 2 * s - 1) * ys);
    return {constant + q.value.real() / denom, q.err_estimate / denom, q.evals,
            Method::eichler};
}

std::vector<long long> odd_zeta_weight_poly(int n)
{
    switch (n) {
        case 1: return Poly{1};
        case 2: return Poly{1, -2};
        case 3: return affine(2, -17);
        case 4: return poly_mul(Poly{1, -2}, affine(1, -31));
        case 6: {
            Poly q = affine(1, -512);
            const Poly u2 = poly_scale(kU2, 5461);
            q.resize(5, 0);
            for (size_t i = 0; i < u2.size(); ++i) q[i] += u2[i];
            return poly_mul(Poly{1, -2}, q);
        }
        case 5: return affine(2, -259);  // the zeta(11) companion; see zeta11_integral
    }
    throw domain_error("odd_zeta_weight_poly: n must be one of {1,2,3,4,5,6}");
}

double odd_zeta_integral(int n, const QuadratureSpec& spec)
{
    static const std::map<int, std::pair<long long, long long>> coeff = {
        {1, {2, 7}},
        {2, {8, 93}},
        {3, {32, 5715}},
        {4, {128, 160965}},
        {6, {4096, 3831545025LL}},
    };
    auto it = coeff.find(n);
    if (it == coeff.end()) throw domain_error("odd_zeta_integral: n must be in {1,2,3,4,6}");
    const Poly p = odd_zeta_weight_poly(n);
    auto f = [&](double t, double) {
        return cplx(polyval(p, t) * ipow_d(k_from_complement(t), 2 * n));
    };
    const QuadOutcome q = quad_tanh_sinh_01(f, spec);
    const double value = double(it->second.first) / double(it->second.second) * q.value.real();
    return value / zeta_int(2 * n + 1);
}

double vanishing_integral(int idx, const QuadratureSpec& spec)
{
    Poly p;
    int pow_c = 0, pow_t = 0;  // powers of K(sqrt(1-t)) and K(sqrt(t))
    switch (idx) {
        case 1: p = affine(2, -17); pow_c = 2; pow_t = 4; break;
        case 2: p = poly_mul(Poly{1, -2}, affine(1, -31)); pow_c = 2; pow_t = 6; break;
        case 3: p = odd_zeta_weight_poly(6); pow_c = 2; pow_t = 10; break;
        case 4: p = odd_zeta_weight_poly(6); pow_c = 4; pow_t = 8; break;
        default: throw domain_error("vanishing_integral: idx must be in {1,2,3,4}");
    }
    auto f = [&](double t, double omt) {
        return cplx(polyval(p, t) * ipow_d(k_from_complement(t), pow_c) *
                    ipow_d(k_from_complement(omt), pow_t));
    };
    return quad_tanh_sinh_01(f, spec).value.real();
}

double vanishing_integral_weight10(const QuadratureSpec& spec)
{
    const Poly p = affine(8, -1049);
    auto f = [&](double t, double omt) {
        return cplx(polyval(p, t) * ipow_d(k_from_complement(omt), 10));
    };
    return quad_tanh_sinh_01(f, spec).value.real();
}

double zeta11_integral(const QuadratureSpec& spec)
{
    Poly p = affine(2, -259);
    const Poly u2 = poly_scale(kU2, 1382);
    p.resize(5, 0);
    for (size_t i = 0; i < u2.size(); ++i) p[i] += u2[i];
    auto f = [&](double t, double omt) {
        return cplx(polyval(p, t) * ipow_d(k_from_complement(omt), 10));
    };
    const QuadOutcome q = quad_tanh_sinh_01(f, spec);
    return 512.0 / 29016225.0 * q.value.real() / zeta_int(11);
}

ReflectionReport catalan_k_integral(int s, const QuadratureSpec& spec)
{
    const auto& cc = ConstantsCache::get();
    const double pi = M_PI;
    double lhs = 0.0, constant = 0.0, coeff = 0.0;
    switch (s) {
        case 2:
            lhs = 3.0 * cc.catalan() / (2.0 * pi * pi);
            constant = 21.0 * cc.zeta(3) / (4.0 * ipow_d(pi, 3));
            coeff = -3.0 / (2.0 * ipow_d(pi, 3));
            break;
        case 3:
            lhs = 105.0 * cc.zeta(3) / (128.0 * ipow_d(pi, 3));
            constant = 1395.0 * cc.zeta(5) / (64.0 * ipow_d(pi, 5));
            coeff = 15.0 / (8.0 * ipow_d(pi, 5));
            break;
        case 4:
            lhs = 105.0 * cc.beta(4) / (136.0 * ipow_d(pi, 4));
            constant = 200025.0 * cc.zeta(7) / (2176.0 * ipow_d(pi, 7));
            coeff = -70.0 / (136.0 * ipow_d(pi, 7));
            break;
        case 5:
            lhs = 4725.0 * cc.zeta(5) / (8192.0 * ipow_d(pi, 5));
            constant = 50703975.0 * cc.zeta(9) / (126976.0 * ipow_d(pi, 9));
            coeff = 315.0 / (992.0 * ipow_d(pi, 9));
            break;
        case 7:
            lhs = 8243235.0 * cc.zeta(7) / (22544384.0 * ipow_d(pi, 7));
            constant = 11506129710075.0 * cc.zeta(13) / (1431568384.0 * ipow_d(pi, 13));
            coeff = 3003.0 / (349504.0 * ipow_d(pi, 13));
            break;
        default: throw domain_error("catalan_k_integral: s must be one of {2,3,4,5,7}");
    }
    const Poly p = core_poly(s);
    // integral over [0, 1/2]: t = u/2, both K arguments stay accurate
    auto f = [&](double u, double) {
        const double t = 0.5 * u;
        const double kt = k_from_complement(1.0 - t);
        const double kc = k_from_complement(t);
        const double ratio2 = (kc / kt) * (kc / kt);
        return cplx(polyval(p, t) * ipow_d(kt, 2 * (s - 1)) * ipow_d(ratio2 - 1.0, s - 1));
    };
    const QuadOutcome q = quad_tanh_sinh_01(f, spec);
    const double rhs = constant + coeff * 0.5 * q.value.real();
    return {lhs, rhs, std::abs(lhs - rhs), s - 1, cplx(-0.5, 0.5)};
}

namespace {

void require_ray_point(HalfPlanePoint z, double lo, double hi, const char* who)
{
    if (std::abs(z.re) > 1e-12 || z.im < lo || z.im > hi)
        throw domain_error(std::string(who) + ": needs z = iy with y in the supported range");
}

// sum sigma_3(n) n^{-3} e^{2 pi i n z} at z = iy
double lambert_sigma3(double y)
{
    double acc = 0.0;
    for (int n = 1; n < 400; ++n) {
        const double term = sigma_nu(3, n) / ipow_d(double(n), 3) * std::exp(-2.0 * M_PI * n * y);
        acc += term;
        if (term < 1e-22 * (1.0 + acc)) break;
    }
    return acc;
}

} // namespace

cplx eichler_e4_integral_ray(HalfPlanePoint z, const QuadratureSpec& spec)
{
    (void)spec;
    require_ray_point(z, 0.05, 10.0, "eichler_e4_integral_ray");
    const double y = z.im;
    auto f = [&](double t) {
        const cplx one_minus_e4 = 1.0 - eisenstein_e4(HalfPlanePoint(0.0, y + t));
        return one_minus_e4 * cplx(-t * t) * cplx(0.0, 1.0);
    };
    const double top = 9.0;  // 240 e^{-2 pi (y+T)} T^2 < 1e-20 beyond this height
    return quad_gauss_legendre(f, 0.0, top, 9).value;
}

cplx eichler_e4_integral_lambda(HalfPlanePoint z, const QuadratureSpec& spec)
{
    require_ray_point(z, 0.25, 3.0, "eichler_e4_integral_lambda");
    const cplx zc = z.to_complex();
    const cplx lambda_end = modular_lambda(z);
    auto integrand = [&](cplx t) {
        const cplx kt = elliptic_k(t);
        const cplx ratio = cplx(0, 1) * elliptic_k(1.0 - t) / kt;
        const cplx e4 = ipow_c(2.0 * kt / M_PI, 4) * (1.0 - t + t * t);
        return (1.0 - e4) * ipow_c(ratio - zc, 2) / (t * (1.0 - t) * kt * kt);
    };
    const QuadOutcome q = quad_segment(integrand, lambda_end, spec);
    return cplx(0.0, M_PI / 4.0) * q.value;
}

ReflectionReport eichler_e4_check(HalfPlanePoint z, const QuadratureSpec& spec)
{
    require_ray_point(z, 0.3, 3.0, "eichler_e4_check");
    const cplx lhs = lambert_sigma3(z.im);
    const cplx pref = ipow_c(cplx(0.0, 2.0 * M_PI), 3) / 480.0;
    const cplx rhs = pref * eichler_e4_integral_ray(z, spec);
    return {lhs, rhs, std::abs(lhs - rhs), 3, z.to_complex()};
}

std::vector<double> elliptic_substitution_residuals(HalfPlanePoint z, const QuadratureSpec& spec)
{
    require_ray_point(z, 0.3, 2.0, "elliptic_substitution_residuals");
    const double y = z.im;
    const cplx zc = z.to_complex();

    double s_minus = 0.0, s_plus = 0.0;
    for (int n = 0; n < 200; ++n) {
        const double e = std::exp(-2.0 * M_PI * (2 * n + 1) * y);
        if (e < 1e-22) break;
        const double c = 1.0 / ipow_d(double(2 * n + 1), 3);
        s_minus += c * e / (1.0 - e);  // 1/(e^{(2n+1) 2 pi y} - 1)
        s_plus += c * e / (1.0 + e);
    }

    const cplx l_z = modular_lambda(z);
    const cplx l_2z = modular_lambda(HalfPlanePoint(2.0 * zc));
    auto bracket = [&](cplx t, cplx shift) {
        const cplx kt = elliptic_k(t);
        return std::pair<cplx, cplx>(kt, cplx(0, 1) * elliptic_k(1.0 - t) / kt - shift);
    };
    auto f1 = [&](cplx t) {
        auto [kt, br] = bracket(t, zc);
        return -(kt * kt) / 16.0 * br * br * t / (1.0 - t);
    };
    auto f2 = [&](cplx t) {
        auto [kt, br] = bracket(t, 2.0 * zc);
        return -(kt * kt) / 8.0 * br * br / (1.0 - t);
    };
    auto f3 = [&](cplx t) {
        auto [kt, br] = bracket(t, 2.0 * zc);
        return -(kt * kt) / 8.0 * br * br;
    };
    const cplx i1 = quad_segment(f1, l_z, spec).value;
    const cplx i2 = quad_segment(f2, l_2z, spec).value;
    const cplx i3 = quad_segment(f3, l_2z, spec).value;
    return {std::abs(cplx(s_minus) - i1), std::abs(cplx(s_minus) - i2),
            std::abs(cplx(s_plus) - i3)};
}

} // namespace ezeta

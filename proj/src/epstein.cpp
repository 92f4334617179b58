#include "ezeta/epstein.hpp"

#include <cfloat>
#include <cmath>

#include "ezeta/special_functions.hpp"
#include "qcore.hpp"

namespace ezeta {

namespace {

double ipow_d(double b, int e)
{
    double r = 1.0;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

void check_s(int s)
{
    if (s < 2 || s > 16) throw domain_error("epstein: s must be an integer in [2, 16]");
}

} // namespace

EvalResult epstein_lattice_oracle(HalfPlanePoint z, int s, int radius)
{
    check_s(s);
    if (radius < 10) throw domain_error("epstein_lattice_oracle: radius >= 10 required");
    const double x = z.re, y = z.im;
    const long R = radius;

    long double acc = 0.0L, abs_acc = 0.0L;
    // (m,n) and (-m,-n) contribute equally: m >= 1 full n range, m = 0 has n >= 1
    for (long n = 1; n <= R; ++n) {
        acc += 1.0L / ipow_d(double(n) * double(n), s);
    }
    for (long m = 1; m <= R; ++m) {
        const double my = double(m) * y;
        const double my2 = my * my;
        const double mx = double(m) * x;
        for (long n = -R; n <= R; ++n) {
            const double re = mx + double(n);
            acc += 1.0L / ipow_d(re * re + my2, s);
        }
    }
    abs_acc = acc;
    const double ys = ipow_d(y, s);
    const double pref = ys / zeta_int(2 * s);  // doubled sum absorbs the 1/2
    const double value = double(pref * acc);

    // tail bound: |m z + n|^2 >= mu^2 max(|m|,|n|)^2 with mu the minimum of
    // |u z + v| over the boundary of the unit square; 8r points per shell.
    const double zn2 = x * x + y * y;
    double mu2 = y * y;
    if (std::abs(x) > 1.0) mu2 += (std::abs(x) - 1.0) * (std::abs(x) - 1.0);
    const double ustar = -x / zn2;
    double edge = 1.0;  // u = 0 endpoint of the |v| = 1 edge
    if (std::abs(ustar) <= 1.0) edge = y * y / zn2;
    else edge = std::min(zn2 + 2.0 * x + 1.0, zn2 - 2.0 * x + 1.0);
    mu2 = std::min(mu2, edge);
    const double tail = 8.0 * ys / ipow_d(mu2, s) * std::pow(double(R), 2.0 - 2.0 * s) /
                        (2.0 * s - 2.0) / (2.0 * zeta_int(2 * s));
    const double rounding = 4.0 * DBL_EPSILON * double(pref * abs_acc);
    const long work = R + (2 * R + 1) * R;
    return {value, tail + rounding, work, Method::lattice};
}

EvalResult epstein_fourier(HalfPlanePoint z, int s, long n_max)
{
    check_s(s);
    if (z.im < 0.02)
        throw domain_error("epstein_fourier: Im z too small for the unreduced expansion");
    const auto out = detail::fourier_q(z.re, z.im, s, n_max);
    const double value = double(out.value);
    return {value, double(out.tail) + 2.0 * DBL_EPSILON * std::abs(value), out.work,
            Method::fourier};
}

EvalResult epstein_ramanujan_level1(HalfPlanePoint z, int m, long n_max)
{
    if (m < 1) throw domain_error("epstein_ramanujan_level1: m >= 1 required");
    check_s(m + 1);
    if (z.im < 0.02)
        throw domain_error("epstein_ramanujan_level1: Im z too small for the unreduced series");
    const auto out = detail::ramanujan1_q(z.re, z.im, m, n_max);
    const double value = double(out.value);
    return {value, double(out.tail) + 2.0 * DBL_EPSILON * std::abs(value), out.work,
            Method::ramanujan1};
}

EvalResult epstein_ramanujan_level4(HalfPlanePoint z, int m, const TruncationPolicy& policy)
{
    if (m < 1) throw domain_error("epstein_ramanujan_level4: m >= 1 required");
    check_s(m + 1);
    if (z.im < 0.02)
        throw domain_error("epstein_ramanujan_level4: Im z too small for the series");
    const detail::qreal cut = detail::qreal(policy.tol) * detail::qreal(1e-12);
    const auto out = detail::ramanujan4_q(z.re, z.im, m, cut, policy.max_terms);
    const double value = double(out.value);
    return {value, double(out.tail) + 2.0 * DBL_EPSILON * std::abs(value), out.work,
            Method::ramanujan4};
}

EvalResult epstein_levelN(HalfPlanePoint z, int s, int level, long n_max)
{
    check_s(s);
    if (level < 1) throw domain_error("epstein_levelN: N >= 1 required");
    const auto out = detail::level_n_q(z.re, z.im, s, level, n_max);
    const double value = double(out.value);
    return {value, double(out.tail) + 2.0 * DBL_EPSILON * std::abs(value), out.work,
            Method::mobius};
}

std::array<double, 5> addition_formula_residuals(HalfPlanePoint z, int s)
{
    check_s(s);
    const cplx zc = z.to_complex();
    const auto E = [&](cplx w, int level) {
        return epstein_levelN(HalfPlanePoint(w), s, level).value;
    };
    const double two_s = ipow_d(2.0, s);

    const double e4_z = E(zc, 4);
    const double e2_z = E(zc, 2);
    const double e1_z = E(zc, 1);

    std::array<double, 5> r{};
    // half-period shift on level 4
    r[0] = std::abs(e4_z - E(zc + 0.5, 4));
    // level-2 pair: 2^s E4(z/2) and E4(z) + E4(-1/(2(2z+1)))
    const double lhs_pair = two_s * E(0.5 * zc, 4);
    r[1] = std::max(std::abs(e2_z - lhs_pair),
                    std::abs(e2_z - (e4_z + E(-1.0 / (2.0 * (2.0 * zc + 1.0)), 4))));
    // level-1 splitting
    r[2] = std::abs(e1_z - two_s * (E(0.5 * zc, 4) + two_s * E(-1.0 / (4.0 * zc), 4)));
    // level 2 from level 1
    r[3] = std::abs(e2_z - (E(2.0 * zc, 1) - e1_z / two_s) / (two_s - 1.0 / two_s));
    // level 4 from level 1
    r[4] = std::abs(e4_z - (E(4.0 * zc, 1) - E(2.0 * zc, 1) / two_s) /
                              (two_s * (two_s - 1.0 / two_s)));
    return r;
}

double laplacian_eigencheck(HalfPlanePoint z, int s, double h)
{
    check_s(s);
    if (h < 1e-4 || h > 1e-2) throw domain_error("laplacian_eigencheck: h outside [1e-4, 1e-2]");
    if (z.im <= 2.0 * h) throw domain_error("laplacian_eigencheck: z too close to the boundary");
    const auto E = [&](double x, double y) {
        return epstein_fourier(HalfPlanePoint(x, y), s).value;
    };
    const double f0 = E(z.re, z.im);
    const double lap = (E(z.re + h, z.im) + E(z.re - h, z.im) + E(z.re, z.im + h) +
                        E(z.re, z.im - h) - 4.0 * f0) /
                       (h * h);
    const double lhs = z.im * z.im * lap;
    const double rhs = double(s) * double(s - 1) * f0;
    return std::abs(lhs - rhs) / std::abs(rhs);
}

} // namespace ezeta

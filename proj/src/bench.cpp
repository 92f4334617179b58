#include "ezeta/bench.hpp"

#include <cmath>

#include "ezeta/epstein.hpp"
#include "qcore.hpp"

namespace ezeta {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

using detail::qreal;

void series_rows(BenchReport& rep, double x, double y, int s)
{
    const qreal ref = detail::fourier_q(qreal(x), qreal(y), s).value;
    for (long n : {2L, 4L, 8L, 16L, 32L}) {
        const auto f = detail::fourier_q(qreal(x), qreal(y), s, n);
        rep.rows.push_back(
            {"fourier", x, y, s, n, double(detail::q_abs(f.value - ref))});
        const qreal r = detail::ramanujan1_partial_q(qreal(x), qreal(y), s - 1, n);
        rep.rows.push_back({"ramanujan1", x, y, s, n, double(detail::q_abs(r - ref))});
    }
    for (int radius : {25, 50, 100, 200, 400}) {
        const EvalResult lat = epstein_lattice_oracle(HalfPlanePoint(x, y), s, radius);
        rep.rows.push_back({"lattice", x, y, s, lat.work,
                            std::abs(lat.value - double(ref))});
    }
}

} // namespace

BenchReport run_bench()
{
    BenchReport rep;
    const double zs[][2] = {{0.0, 1.0}, {0.3, 0.7}, {0.0, 2.0}};
    for (const auto& z : zs)
        for (int s : {2, 3, 5}) series_rows(rep, z[0], z[1], s);

    // log-error slope of the level-1 series partial sums at z = i; the
    // divisor-sum and polynomial factors perturb single steps, so the rate
    // is taken as a least-squares fit over terms 2..10
    for (int m : {1, 2, 4}) {
        const qreal ref = detail::ramanujan1_q(0, 1, m).value;
        std::vector<double> ns, logs;
        for (long n = 2; n <= 10; ++n) {
            const qreal err = detail::q_abs(detail::ramanujan1_partial_q(0, 1, m, n) - ref);
            if (err < qreal(1e-30)) break;
            ns.push_back(double(n));
            logs.push_back(std::log(double(err)));
        }
        rep.fits.push_back({"ramanujan1_rate_m" + std::to_string(m), fit_slope(ns, logs),
                            -2.0 * M_PI});
    }

    // lattice-sum error exponent at s = 2, z = i
    {
        const qreal ref = detail::fourier_q(0, 1, 2).value;
        std::vector<double> lr, le;
        for (int radius : {25, 50, 100, 200, 400, 800}) {
            const EvalResult lat = epstein_lattice_oracle(HalfPlanePoint(0.0, 1.0), 2, radius);
            lr.push_back(std::log(double(radius)));
            le.push_back(std::log(std::abs(lat.value - double(ref))));
        }
        rep.fits.push_back({"lattice_exponent_s2", fit_slope(lr, le), -2.0});
    }
    return rep;
}

} // namespace ezeta

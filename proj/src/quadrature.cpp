#include "ezeta/quadrature.hpp"

#include <cmath>
#include <vector>

namespace ezeta {

namespace {

struct Node {
    double dist;    // distance from the nearer endpoint, in (0, 1/2]
    double weight;  // includes the step factor of its level
    bool upper;     // true: t = 1 - dist, false: t = dist
};

// Nodes of the tanh-sinh transform t = (1 + tanh((pi/2) sinh(v)))/2 at
// v = k h.  dist = 1/(1 + e^{2w}) is kept instead of t so integrands can
// resolve endpoint singularities; w is capped where weights underflow any
// integrable log-power growth.
void level_nodes(int level, std::vector<Node>& out)
{
    out.clear();
    const double h = std::ldexp(1.0, -level);
    const int stride = (level == 0) ? 1 : 2;
    const int start = (level == 0) ? 0 : 1;
    for (int k = start;; k += stride) {
        const double v = k * h;
        const double w = 0.5 * M_PI * std::sinh(v);
        if (w > 120.0) break;
        const double e = std::exp(-2.0 * w);
        const double dist = e / (1.0 + e);
        const double weight = M_PI * std::cosh(v) * dist * (1.0 - dist) * h;
        if (k == 0) {
            out.push_back({0.5, 0.5 * weight, false});
            out.push_back({0.5, 0.5 * weight, true});
        } else {
            out.push_back({dist, weight, false});
            out.push_back({dist, weight, true});
        }
    }
}

} // namespace

QuadOutcome quad_tanh_sinh_01(const std::function<cplx(double, double)>& f,
                              const QuadratureSpec& spec)
{
    if (spec.max_level > 14) throw domain_error("quad_tanh_sinh_01: max_level > 14");
    if (spec.tol < 1e-13) throw domain_error("quad_tanh_sinh_01: tol below 1e-13");
    std::vector<Node> nodes;
    cplx sum{};
    long evals = 0;
    double err = HUGE_VAL;
    cplx prev{};
    int level = 0;
    for (; level <= spec.max_level; ++level) {
        level_nodes(level, nodes);
        cplx acc{};
        for (const Node& nd : nodes) {
            const double t = nd.upper ? 1.0 - nd.dist : nd.dist;
            const double omt = nd.upper ? nd.dist : 1.0 - nd.dist;
            acc += nd.weight * f(t, omt);
            ++evals;
        }
        // halving the step: previous weights each shrink by 2, new nodes fill in
        sum = (level == 0) ? acc : 0.5 * sum + acc;
        if (level > 0) {
            err = std::abs(sum - prev);
            if (err <= spec.tol * std::max(1.0, std::abs(sum)) && level >= 3)
                return {sum, err, evals, level};
        }
        prev = sum;
    }
    throw accuracy_error("quad_tanh_sinh_01: level budget exhausted, estimate " +
                         std::to_string(err));
}

QuadOutcome quad_segment(const std::function<cplx(cplx)>& f, cplx end,
                         const QuadratureSpec& spec)
{
    // the segment 0 -> end crosses [1, inf) only if end is real >= 1
    if (end.imag() == 0.0 && end.real() >= 1.0)
        throw domain_error("quad_segment: segment meets the ray [1, inf)");
    auto g = [&](double u, double) { return f(end * u); };
    QuadOutcome out = quad_tanh_sinh_01(g, spec);
    out.value *= end;
    out.err_estimate *= std::abs(end);
    return out;
}

namespace {

struct GaussRule {
    std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

GaussRule build_gauss(int n)
{
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

const GaussRule& gauss40()
{
    static const GaussRule r = build_gauss(40);
    return r;
}
const GaussRule& gauss20()
{
    static const GaussRule r = build_gauss(20);
    return r;
}

cplx gl_panels(const std::function<cplx(double)>& f, double a, double b, int panels,
               const GaussRule& rule, long& evals)
{
    cplx acc{};
    const double step = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * step;
        const double mid = lo + 0.5 * step, half = 0.5 * step;
        for (size_t i = 0; i < rule.x.size(); ++i) {
            acc += half * rule.w[i] * f(mid + half * rule.x[i]);
            ++evals;
        }
    }
    return acc;
}

} // namespace

QuadOutcome quad_gauss_legendre(const std::function<cplx(double)>& f, double a, double b,
                                int panels)
{
    long evals = 0;
    const cplx fine = gl_panels(f, a, b, panels, gauss40(), evals);
    const cplx coarse = gl_panels(f, a, b, panels, gauss20(), evals);
    return {fine, std::abs(fine - coarse), evals, 0};
}

} // namespace ezeta

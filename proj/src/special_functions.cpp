#include "ezeta/special_functions.hpp"

#include <cmath>

#include "ezeta/arithmetic.hpp"
#include "qcore.hpp"

namespace ezeta {

const char* method_name(Method m)
{
    switch (m) {
        case Method::lattice: return "lattice";
        case Method::fourier: return "fourier";
        case Method::ramanujan1: return "ramanujan1";
        case Method::ramanujan4: return "ramanujan4";
        case Method::mobius: return "mobius";
        case Method::eichler: return "eichler";
    }
    return "?";
}

cplx agm(cplx a, cplx b)
{
    if (a == cplx(0.0) || b == cplx(0.0))
        throw domain_error("agm: zero argument");
    for (int it = 0; it < 64; ++it) {
        const cplx an = 0.5 * (a + b);
        cplx bn = std::sqrt(a * b);
        if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
        a = an;
        b = bn;
        if (std::abs(a - b) <= 4e-16 * std::abs(a)) return 0.5 * (a + b);
    }
    throw accuracy_error("agm: no convergence within 64 iterations");
}

cplx elliptic_k(cplx t)
{
    if (t.imag() == 0.0 && t.real() >= 1.0)
        throw domain_error("elliptic_k: parameter on the branch cut [1, inf)");
    return cplx(M_PI) / (2.0 * agm(cplx(1.0), std::sqrt(cplx(1.0) - t)));
}

double bessel_k_half(int m, double y)
{
    if (m < 0) throw domain_error("bessel_k_half: order must be >= 0");
    if (!(y > 0.0)) throw domain_error("bessel_k_half: y must be positive");
    const auto op = derivative_operator(m);
    // (m+k)!/(k!(m-k)!(2y)^k) == c[k] / y^k
    double acc = 0.0, p = 1.0;
    for (int k = 0; k <= m; ++k) {
        acc += double(op.c[k]) * p;
        p /= y;
    }
    return std::sqrt(M_PI / (2.0 * y)) * std::exp(-y) * acc;
}

ConstantsCache::ConstantsCache()
{
    for (int k = 2; k <= max_index; ++k) zeta_[k] = double(detail::zeta_q(k));
    for (int s = 1; s <= max_index; ++s) beta_[s] = double(detail::beta_q(s));
    zeta_[0] = zeta_[1] = 0.0;
    beta_[0] = 0.0;
}

const ConstantsCache& ConstantsCache::get()
{
    static const ConstantsCache cache;
    return cache;
}

double ConstantsCache::zeta(int k) const
{
    if (k < 2 || k > max_index) throw domain_error("zeta: k must be in [2, 40]");
    return zeta_[k];
}

double ConstantsCache::beta(int s) const
{
    if (s < 1 || s > max_index) throw domain_error("beta: s must be in [1, 40]");
    return beta_[s];
}

double ConstantsCache::catalan() const { return beta_[2]; }

double zeta_int(int k) { return ConstantsCache::get().zeta(k); }
double catalan() { return ConstantsCache::get().catalan(); }
double dirichlet_beta(int s) { return ConstantsCache::get().beta(s); }

} // namespace ezeta

#include "ezeta/arithmetic.hpp"

#include <algorithm>
#include <cmath>

#include "ezeta/types.hpp"

namespace ezeta {

int mobius(long long n)
{
    if (n < 1) throw domain_error("mobius: n must be positive");
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<long long> divisors(long long n)
{
    if (n < 1) throw domain_error("divisors: n must be positive");
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

double sigma_nu(int nu, long long n)
{
    double acc = 0.0;
    for (long long d : divisors(n)) acc += std::pow(double(d), nu);
    return acc;
}

double InversePolyExpansion::eval(double alpha, double y) const
{
    double poly = 0.0;
    for (int k = 0; k <= m; ++k)
        poly += double(c[k]) * std::pow(alpha, m - k) * std::pow(y, -(m + k));
    const double v = std::exp(-alpha * y) * poly;
    return (m % 2) ? -v : v;
}

InversePolyExpansion derivative_operator(int m)
{
    if (m < 0) throw domain_error("derivative_operator: m must be >= 0");
    if (m > 17) throw domain_error("derivative_operator: coefficients overflow past m = 17");
    std::vector<long long> c{1};
    for (int mm = 1; mm <= m; ++mm) {
        std::vector<long long> next(mm + 1, 0);
        for (int k = 0; k <= mm; ++k) {
            long long v = (k < (int)c.size()) ? c[k] : 0;
            if (k >= 1) v += (long long)(mm + k - 1) * c[k - 1];
            next[k] = v;
        }
        c = std::move(next);
    }
    return InversePolyExpansion{m, std::move(c)};
}

} // namespace ezeta

#pragma once

#include <cstdint>
#include <vector>

namespace ezeta {

/// Moebius function by trial-division factorization.
int mobius(long long n);

/// sigma_nu(n) = sum of d^nu over the divisors d of n.  Negative nu gives
/// the rational divisor sums used by the series evaluators.
double sigma_nu(int nu, long long n);

/// Ascending list of divisors of n.
std::vector<long long> divisors(long long n);

/// Exact-integer expansion of the operator (d/dy . 1/y)^m applied to
/// e^{-alpha y}:
///
///   (d/dy 1/y)^m e^{-alpha y}
///     = (-1)^m e^{-alpha y} sum_{k=0}^{m} c[k] alpha^{m-k} y^{-(m+k)}.
///
/// The coefficients follow the recurrence c_{m,k} = c_{m-1,k} +
/// (m+k-1) c_{m-1,k-1} obtained by iterating q -> q'/y - q/y^2 - alpha q/y
/// symbolically, and coincide with (m+k)!/(k!(m-k)!2^k).
struct InversePolyExpansion {
    int m = 0;
    std::vector<long long> c;  // c[k], k = 0..m; c[0] == 1

    /// Value of (d/dy 1/y)^m e^{-alpha y}, sign and exponential included.
    double eval(double alpha, double y) const;
};

/// Builds the expansion for m >= 0.  Coefficients stay within 64-bit
/// integers for m <= 17; larger m throws domain_error.
InversePolyExpansion derivative_operator(int m);

} // namespace ezeta

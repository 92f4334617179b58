#pragma once

#include "ezeta/types.hpp"

namespace ezeta {

/// Arithmetic-geometric mean with the square-root branch chosen so that
/// |a_{n+1} - b_{n+1}| <= |a_{n+1} + b_{n+1}| at every step.  Capped at 64
/// iterations; exceeding the cap throws accuracy_error.
cplx agm(cplx a, cplx b);

/// Complete elliptic integral K(sqrt(t)) = pi / (2 agm(1, sqrt(1-t))) with
/// principal square roots.  t must stay off the real ray [1, +inf).
cplx elliptic_k(cplx t);

/// K_{m+1/2}(y) for y > 0 through the terminating closed form
/// sqrt(pi/(2y)) e^{-y} sum_{k<=m} (m+k)! / (k! (m-k)! (2y)^k).
double bessel_k_half(int m, double y);

/// Number-theoretic constants, built once and immutable afterwards.
/// Even zeta arguments use the Bernoulli closed forms; odd arguments are
/// direct sums with an integral tail correction; beta values come from
/// accelerated alternating summation.
class ConstantsCache {
public:
    static const ConstantsCache& get();

    double zeta(int k) const;   // k >= 2
    double beta(int s) const;   // s >= 1
    double catalan() const;     // = beta(2)

    static constexpr int max_index = 40;

private:
    ConstantsCache();
    double zeta_[max_index + 1];
    double beta_[max_index + 1];
};

double zeta_int(int k);
double catalan();
double dirichlet_beta(int s);

} // namespace ezeta

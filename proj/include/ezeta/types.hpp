#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ezeta {

using cplx = std::complex<double>;

/// Argument outside an operation's admissible region (lower half-plane,
/// branch cut, unsupported level, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested accuracy not reachable within the configured budget.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series or product would need more terms than the policy allows.
struct truncation_error : accuracy_error {
    using accuracy_error::accuracy_error;
};

/// A point z = re + i*im with im > 0 strictly.
struct HalfPlanePoint {
    double re = 0.0;
    double im = 1.0;

    HalfPlanePoint() = default;
    HalfPlanePoint(double re_, double im_) : re(re_), im(im_)
    {
        if (!(im > 0.0) || !std::isfinite(re) || !std::isfinite(im))
            throw domain_error("HalfPlanePoint: need finite z with Im z > 0");
    }
    explicit HalfPlanePoint(cplx z) : HalfPlanePoint(z.real(), z.imag()) {}

    cplx to_complex() const { return {re, im}; }
};

/// Budget for series/product truncation.
struct TruncationPolicy {
    double tol = 1e-16;
    long max_terms = 200000;
};

enum class Method { lattice, fourier, ramanujan1, ramanujan4, mobius, eichler };

const char* method_name(Method m);

/// Universal return of the Epstein evaluators.  err_estimate is the
/// module's own bound on truncation plus accumulated rounding, never a guess.
struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long work = 0;  // series terms, lattice points or integrand evaluations
    Method method = Method::fourier;
};

enum class QuadRule { tanh_sinh, gauss_legendre };

struct QuadratureSpec {
    QuadRule rule = QuadRule::tanh_sinh;
    int max_level = 12;  // tanh-sinh halving depth, <= 14
    double tol = 1e-10;
};

} // namespace ezeta

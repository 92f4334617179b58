#pragma once

#include <functional>

#include "ezeta/types.hpp"

namespace ezeta {

struct QuadOutcome {
    cplx value{};
    double err_estimate = 0.0;
    long evals = 0;
    int levels = 0;
};

/// tanh-sinh rule over (0,1).  The integrand receives both t and 1-t so
/// that quantities vanishing at either endpoint stay accurate; logarithmic
/// or integrable power endpoint singularities are admissible.  Throws
/// accuracy_error when the level budget is exhausted above spec.tol.
QuadOutcome quad_tanh_sinh_01(const std::function<cplx(double t, double one_minus_t)>& f,
                              const QuadratureSpec& spec = {});

/// Straight segment from 0 to `end` in the complex t-plane, parametrized
/// t = u * end.  The segment is rejected if it meets the ray [1, +inf).
QuadOutcome quad_segment(const std::function<cplx(cplx t)>& f, cplx end,
                         const QuadratureSpec& spec = {});

/// Composite Gauss-Legendre rule on [a, b] (fixed panels, 40 nodes each);
/// the error estimate comes from a 20-node re-evaluation.
QuadOutcome quad_gauss_legendre(const std::function<cplx(double x)>& f, double a,
                                double b, int panels = 8);

} // namespace ezeta

#pragma once

#include <string>
#include <vector>

#include "ezeta/types.hpp"

namespace ezeta {

struct BenchRow {
    std::string method;
    double z_re = 0.0, z_im = 0.0;
    int s = 0;
    long work = 0;
    double err = 0.0;  // absolute error against the converged Fourier reference
};

struct BenchFit {
    std::string id;
    double value = 0.0;     // fitted slope / exponent
    double expected = 0.0;  // -2*pi for the level-1 series, -2 for the lattice
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchFit> fits;
};

/// Convergence study: per-method (work, error) tables at z in
/// {i, 0.3+0.7i, 2i} and s in {2, 3, 5}, a log-error slope fit for the
/// level-1 series partial sums at z = i, and a log-log error exponent fit
/// for the lattice sum at s = 2.
BenchReport run_bench();

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace ezeta

#pragma once

#include <string>
#include <vector>

namespace ezeta {

struct IdentityResult {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    long work = 0;
};

struct VerifyOptions {
    std::string only;       // run a single identity when non-empty
    double tol = 0.0;       // when > 0, loosens every tolerance to max(default, tol)
    unsigned seed = 42;     // randomized grids
    bool quick = false;     // trims the random grid for smoke runs
};

/// Runs the identity registry (or one entry) and returns results sorted by id.
std::vector<IdentityResult> run_verification(const VerifyOptions& opt = {});

/// Ids accepted by VerifyOptions::only, sorted.
std::vector<std::string> verification_ids();

} // namespace ezeta

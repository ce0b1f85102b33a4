// Shared error types and environment knobs.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bv {

// Bad user-supplied configuration (grid sizes, axes, parse failures).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition on field state was violated (nonzero mean,
// missing divergence-free certificate, grid mismatch).
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation not defined for this (d, nu, kappa, alpha) combination.
struct unsupported_config : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NaN/Inf encountered while integrating; carries step context.
struct numerical_fault : std::runtime_error {
    numerical_fault(const std::string& what, std::int64_t step, double time)
        : std::runtime_error(what + " [step " + std::to_string(step) +
                             ", t=" + std::to_string(time) + "]"),
          step_index(step),
          t(time) {}
    std::int64_t step_index = -1;
    double t = 0.0;
};

namespace env {

// BV_THREADS caps data parallelism. All loops in this build are serial, so
// the effective value is always 1; the variable is parsed for forward
// compatibility and reporting.
inline int threads() {
    if (const char* s = std::getenv("BV_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return 1 < v ? 1 : v;
    }
    return 1;
}

// BV_DETERMINISTIC=1 fixes the reduction order. Serial execution always uses
// a fixed order, so results are reproducible regardless; exposed so drivers
// can report the effective mode.
inline bool deterministic() {
    if (const char* s = std::getenv("BV_DETERMINISTIC")) return std::atoi(s) != 0;
    return true;
}

}  // namespace env

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace bv

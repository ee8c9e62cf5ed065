#ifndef TWISTKIT_ERRORS_HPP
#define TWISTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistkit {

// Precondition violations (bad arguments, points off curve, mismatched curves).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// A numeric routine could not certify its result (solver non-convergence,
// no admissible parameter below the configured cap).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested tolerance is below what double precision can deliver.
struct precision_error : numeric_error {
    explicit precision_error(const std::string& msg) : numeric_error(msg) {}
};

// An internal consistency check failed (should never happen on valid data).
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace twistkit

#endif

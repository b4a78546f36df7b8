#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace thetascale {

// Process exit codes used by the command line tool.
enum exit_code : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_domain = 3,
    exit_convergence = 4,
};

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int code() const { return exit_failure; }
};

// Malformed input: field/curve/metric/point grammar, CSV files, config.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
    int code() const override { return exit_parse; }
};

// Precondition violations: dimension mismatch, singular field evaluation,
// wrong causal character, unsupported combination.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
    int code() const override { return exit_domain; }
};

// Value outside representable range (exponent overflow in a scaling factor).
// When raised from inside an integral, `partial` carries the largest finite
// partial value accumulated before the blow-up.
struct divergence_error : domain_error {
    double partial = std::numeric_limits<double>::quiet_NaN();
    explicit divergence_error(const std::string& msg) : domain_error(msg) {}
};

// Mixing values that belong to differently scaled structures.
struct structure_mismatch_error : domain_error {
    explicit structure_mismatch_error(const std::string& msg) : domain_error(msg) {}
};

// Iterative scheme exceeded its budget without meeting its tolerance.
struct convergence_error : error {
    explicit convergence_error(const std::string& msg) : error(msg) {}
    int code() const override { return exit_convergence; }
};

} // namespace thetascale

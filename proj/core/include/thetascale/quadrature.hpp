#pragma once

#include <cstddef>
#include <functional>

#include "thetascale/errors.hpp"

namespace thetascale {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 1000000;
    // Offset used to keep integration endpoints away from integrable
    // singularities at interval boundaries.
    double singularity_clip = 1e-6;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
};

// Adaptive Simpson integration of f over [a, b].
//
// Deterministic: panels are processed left to right, accepted contributions
// are accumulated with compensated summation, and each accepted panel gets
// the Richardson-extrapolated value S2 + (S2 - S1)/15. A panel is accepted
// when |S2 - S1| <= 15 * max(abs_tol * w/(b-a), rel_tol * |S2|).
//
// Throws convergence_error when the subdivision budget is exhausted and
// domain_error when the integrand evaluates to a non-finite value.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg = {});

namespace detail {
// 8-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr double gl8_x[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};
inline constexpr double gl8_w[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
} // namespace detail

// Fixed-order Gauss-Legendre rule. Cheap, smooth-integrand workhorse for
// inner loops that cannot afford adaptive bookkeeping.
template <typename F>
double gauss8(F&& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) acc += detail::gl8_w[i] * f(m + h * detail::gl8_x[i]);
    return acc * h;
}

} // namespace thetascale

#pragma once

#include "thetascale/curves.hpp"

namespace thetascale {

struct GeodesicOptions {
    int max_iterations = 10000;
    double residual_tol = 1e-6; // Euler-Lagrange residual acceptance
    double grad_tol = 1e-10;    // first-order optimality (scaled infinity norm)
    int reparam_interval = 50;  // node-clustering check cadence
    int memory = 8;             // quasi-Newton history length
};

struct GeodesicResult {
    Curve curve; // polyline through the converged nodes
    ScaledLength length;
    // Euler-Lagrange residual for euclidean metrics; for general metrics the
    // optimizer's final scaled gradient norm (no Euclidean EL form applies).
    double el_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Minimum-scaled-length curve between fixed endpoints by direct minimization
// of the discretized length functional. Initialization is the straight chord;
// N is the interior node count. Euclidean and positive-definite general
// metrics only.
GeodesicResult geodesic(const Point& from, const Point& to, const ThetaField& theta,
                        const Metric& metric, int N = 64, const QuadratureConfig& quad = {},
                        const GeodesicOptions& opt = {});

// Length of the minimizing curve, referenced to `from`.
double distance(const Point& from, const Point& to, const ThetaField& theta,
                const Metric& metric, int N = 64, const QuadratureConfig& quad = {},
                const GeodesicOptions& opt = {});

} // namespace thetascale

#pragma once

#include <string>
#include <vector>

#include "thetascale/geometry.hpp"
#include "thetascale/quadrature.hpp"
#include "thetascale/theta_field.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

enum class CurveKind { segment, polyline, polynomial, sampled };

// Parameterized curve gamma(s), s in [0, 1].
struct Curve {
    CurveKind kind = CurveKind::segment;
    int dim = 3;
    Point from, to;                        // segment
    std::vector<Point> pts;                // polyline / sampled nodes
    std::vector<double> grid;              // sampled parameter grid
    std::vector<std::vector<double>> coeff;// polynomial: [0] = t(s), [1..dim] = x_i(s)

    Point at(double s) const;
    void derivative(double s, double& dt_ds, Vec& dx_ds) const;
    // Breakpoints between smooth pieces, including 0 and 1.
    std::vector<double> pieces() const;

    static Curve segment(const Point& from, const Point& to);
    static Curve polyline(std::vector<Point> pts);
    static Curve polynomial(std::vector<std::vector<double>> coeff);
    static Curve sampled(std::vector<double> s_grid, std::vector<Point> pts);
};

// How to take the square root of ds^2 along a curve under an indefinite
// metric: timelike curves integrate sqrt(ds^2), spacelike ones sqrt(-ds^2).
enum class LengthMode { proper_time, proper_length };

// A length referenced to a point; the value lives in that point's number
// structure. theta_id records which field produced the internal scaling.
struct ScaledLength {
    double value = 0.0;
    Point ref;
    std::string theta_id;
};

double curve_length(const Curve& curve, const Metric& metric, const QuadratureConfig& quad = {},
                    LengthMode mode = LengthMode::proper_time);

// Internally scaled length: the factor exp(theta(gamma(s)) - theta(ref))
// multiplies the integrand inside the integral and cannot be pulled out.
ScaledLength curve_length_scaled(const Curve& curve, const Metric& metric,
                                 const ThetaField& theta, const Point& ref,
                                 const QuadratureConfig& quad = {},
                                 LengthMode mode = LengthMode::proper_time);

// Length with the scaling factor accumulated as the running line integral of
// A along the curve itself (reference = gamma(0)). Path dependent for
// non-gradient fields. Euclidean tangent norm.
ScaledLength curve_length_scaled_path(const Curve& curve, const VectorField& field,
                                      const QuadratureConfig& quad = {});

// External scaling: change the reference point of an existing length by one
// multiplicative factor. Transferring equals recomputing at the new ref.
ScaledLength transfer_length(const ScaledLength& len, const ThetaField& theta, const Point& to);

// Max-norm residual of the scaled Euler-Lagrange equation on the grid, per
// component: A_mu |g'| - (dtheta/ds) u_mu - d/ds(u_mu), with u = g'/|g'|.
// Derivatives by differencing on the supplied grid; Euclidean tangent norm.
double el_residual(const Curve& curve, const ThetaField& theta, const std::vector<double>& s_grid);

} // namespace thetascale

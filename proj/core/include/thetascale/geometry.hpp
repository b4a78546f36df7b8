#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "thetascale/theta_field.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

enum class MetricKind { euclidean, minkowski, frw, general };

// Symmetric metric tensor evaluated at a point; n is 1..4.
struct SymMatrix {
    int n = 0;
    std::array<std::array<double, 4>, 4> g{};

    double quadratic(const std::vector<double>& v) const;
};

// Metric specification. Coordinate conventions:
//   euclidean(d): displacement (dx1..dxd)
//   minkowski(d): displacement (dt, dx1..dxd), signature (+,-,...,-), c = 1
//   frw(k, a):    displacement (dt, dr, dOmega) with r taken from x[0] and
//                 dOmega a single angular magnitude, c = 1
//   general:      caller-supplied g(point) with its own coordinate count
struct Metric {
    MetricKind kind = MetricKind::euclidean;
    int d = 3; // spatial dimension for euclidean/minkowski
    double frw_k = 0.0;
    std::vector<double> frw_a_coeff{1.0}; // a(t) polynomial coefficients
    std::function<SymMatrix(const Point&)> general_g;
    int general_n = 0;

    int coords() const;
    double scale_a(double t) const;

    static Metric euclidean(int d);
    static Metric minkowski(int d);
    static Metric frw(double k, std::vector<double> a_coeff);
    static Metric general(std::function<SymMatrix(const Point&)> g, int n);

    std::string describe() const;
};

enum class CausalClass { timelike, lightlike, spacelike, euclidean };

const char* to_string(CausalClass c);

struct LineElementResult {
    double unscaled = 0.0;
    double scaled = 0.0;
    double factor = 1.0;
    CausalClass causal = CausalClass::euclidean;
};

SymMatrix metric_tensor(const Metric& metric, const Point& at);

// ds^2 for the displacement at the given point.
double line_element(const Metric& metric, const Point& at, const std::vector<double>& disp);

// Scaled ds^2: one factor r = exp(theta(at) - theta(ref)) multiplies the
// whole quadratic form, never r^2.
LineElementResult scaled_line_element(const Metric& metric, const ThetaField& theta,
                                      const Point& at, const std::vector<double>& disp,
                                      const Point& ref);

SymMatrix scaled_metric_tensor(const Metric& metric, const ThetaField& theta, const Point& at,
                               const Point& ref);

CausalClass causal_class(double ds2, MetricKind kind);

} // namespace thetascale

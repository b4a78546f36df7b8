#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thetascale/quadrature.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

// Exponent magnitude beyond which exp() would overflow double range.
inline constexpr double exp_guard = 700.0;

enum class ThetaKind {
    constant,
    linear,        // a.x + b
    radial,        // K / |x - center|
    time_linear,   // k (t - t_ref)
    time_quadratic,// k (t^2 - t_ref^2) / 2
    tabulated,     // 1-D table in x1, linear interpolation
    custom,
};

// Scalar field over spacetime points. Immutable after construction; all
// evaluations are pure.
class ThetaField {
public:
    double value(const Point& p) const;
    // Spatial gradient (the scaling vector A at p).
    Vec gradient(const Point& p) const;
    double time_derivative(const Point& p) const;

    ThetaKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool time_only() const {
        return kind_ == ThetaKind::constant || kind_ == ThetaKind::time_linear ||
               kind_ == ThetaKind::time_quadratic;
    }
    // Spatial dependence restricted to the first coordinate (or none at all).
    bool separable() const { return kind_ != ThetaKind::radial && kind_ != ThetaKind::custom; }

    // Canonical spec string; doubles as the field identifier carried by
    // scaled results.
    const std::string& describe() const { return id_; }

    static ThetaField constant(double c);
    static ThetaField linear(const Vec& a, double b = 0.0);
    static ThetaField radial(double K, const Vec& center);
    static ThetaField time_linear(double k, double t_ref);
    static ThetaField time_quadratic(double k, double t_ref);
    static ThetaField tabulated(std::vector<double> xs, std::vector<double> vals,
                                std::string label = "table:<inline>");
    static ThetaField custom(std::function<double(const Point&)> f,
                             std::function<Vec(const Point&)> grad,
                             std::function<double(const Point&)> dt, int dim,
                             std::string label = "custom:<callable>");

private:
    ThetaKind kind_ = ThetaKind::constant;
    int dim_ = 3;
    double c_ = 0.0;       // constant
    Vec a_;                // linear coefficient
    double b_ = 0.0;       // linear offset
    double K_ = 0.0;       // radial strength
    Vec center_;           // radial center
    double k_ = 0.0;       // time coefficient
    double tref_ = 0.0;    // time reference
    std::vector<double> tab_x_, tab_v_;
    std::function<double(const Point&)> fn_;
    std::function<Vec(const Point&)> grad_fn_;
    std::function<double(const Point&)> dt_fn_;
    std::string id_;

    double table_value(double x) const;
    double table_gradient(double x) const;
};

// Vector scaling field A(x); either the gradient of a ThetaField or an
// arbitrary callable (which need not be a gradient).
struct VectorField {
    std::function<Vec(const Point&)> at;
    int dim = 3;

    static VectorField gradient_of(const ThetaField& theta);
    static VectorField custom(std::function<Vec(const Point&)> f, int dim);
    static VectorField zero(int dim);
};

struct Curve; // curves.hpp

// r_{to,from} = exp(theta(to) - theta(from)).
double scaling_factor(const ThetaField& theta, const Point& to, const Point& from);

// exp of the line integral of A along the path; path dependent for
// non-gradient fields.
double path_scaling_factor(const VectorField& field, const Curve& path,
                           const QuadratureConfig& quad = {});

// t' = t - |event - observer.x| / c, the event time on the observer's past
// light cone.
double retarded_time(const Point& observer, const Vec& event_position, double c = 1.0);

// Scaling factor between the retarded-time event and the observer for a
// time-dependent field. The observer's own value cancels, which realizes the
// convention that theta vanishes at the observer.
double lightcone_scaling(const ThetaField& theta, const Point& observer,
                         const Vec& event_position, double c = 1.0);

} // namespace thetascale

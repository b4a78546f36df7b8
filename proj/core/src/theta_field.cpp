#include "thetascale/theta_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "thetascale/curves.hpp"

namespace thetascale {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_vec(const Vec& v) {
    std::string s;
    for (int i = 0; i < v.dim; ++i) {
        if (i) s += ',';
        s += fmt(v[i]);
    }
    return s;
}

} // namespace

ThetaField ThetaField::constant(double c) {
    ThetaField f;
    f.kind_ = ThetaKind::constant;
    f.c_ = c;
    f.dim_ = 3;
    f.id_ = "constant:" + fmt(c);
    return f;
}

ThetaField ThetaField::linear(const Vec& a, double b) {
    ThetaField f;
    f.kind_ = ThetaKind::linear;
    f.a_ = a;
    f.b_ = b;
    f.dim_ = a.dim;
    f.id_ = "linear:" + fmt_vec(a) + ";" + fmt(b);
    return f;
}

ThetaField ThetaField::radial(double K, const Vec& center) {
    if (K == 0.0) throw domain_error("radial field strength must be nonzero");
    ThetaField f;
    f.kind_ = ThetaKind::radial;
    f.K_ = K;
    f.center_ = center;
    f.dim_ = center.dim;
    f.id_ = "radial:" + fmt(K) + "@" + fmt_vec(center);
    return f;
}

ThetaField ThetaField::time_linear(double k, double t_ref) {
    ThetaField f;
    f.kind_ = ThetaKind::time_linear;
    f.k_ = k;
    f.tref_ = t_ref;
    f.dim_ = 3;
    f.id_ = "time-linear:" + fmt(k) + "@" + fmt(t_ref);
    return f;
}

ThetaField ThetaField::time_quadratic(double k, double t_ref) {
    ThetaField f;
    f.kind_ = ThetaKind::time_quadratic;
    f.k_ = k;
    f.tref_ = t_ref;
    f.dim_ = 3;
    f.id_ = "time-quadratic:" + fmt(k) + "@" + fmt(t_ref);
    return f;
}

ThetaField ThetaField::tabulated(std::vector<double> xs, std::vector<double> vals,
                                 std::string label) {
    if (xs.size() < 2 || xs.size() != vals.size())
        throw parse_error("tabulated field needs at least two coordinate,value rows");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw parse_error("tabulated field coordinates must be strictly increasing");
    ThetaField f;
    f.kind_ = ThetaKind::tabulated;
    f.tab_x_ = std::move(xs);
    f.tab_v_ = std::move(vals);
    f.dim_ = 1;
    f.id_ = std::move(label);
    return f;
}

ThetaField ThetaField::custom(std::function<double(const Point&)> f,
                              std::function<Vec(const Point&)> grad,
                              std::function<double(const Point&)> dt, int dim,
                              std::string label) {
    ThetaField t;
    t.kind_ = ThetaKind::custom;
    t.fn_ = std::move(f);
    t.grad_fn_ = std::move(grad);
    t.dt_fn_ = std::move(dt);
    t.dim_ = dim;
    t.id_ = std::move(label);
    return t;
}

double ThetaField::table_value(double x) const {
    // Linear interpolation inside, edge-cell linear extrapolation outside.
    const auto& xs = tab_x_;
    const auto& vs = tab_v_;
    std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    if (hi == 0) hi = 1;
    if (hi == xs.size()) hi = xs.size() - 1;
    const std::size_t lo = hi - 1;
    const double u = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return vs[lo] + u * (vs[hi] - vs[lo]);
}

double ThetaField::table_gradient(double x) const {
    const auto& xs = tab_x_;
    std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    if (hi == 0) hi = 1;
    if (hi == xs.size()) hi = xs.size() - 1;
    const double h = xs[hi] - xs[hi - 1];
    return (table_value(x + h) - table_value(x - h)) / (2.0 * h);
}

double ThetaField::value(const Point& p) const {
    switch (kind_) {
    case ThetaKind::constant:
        return c_;
    case ThetaKind::linear:
        return a_.dot(p.x) + b_;
    case ThetaKind::radial: {
        const double r = (p.x - center_).norm();
        if (r == 0.0) throw domain_error("radial field evaluated at its singular center");
        const double v = K_ / r;
        if (std::fabs(v) > exp_guard)
            throw divergence_error("radial field value exceeds the exponent guard at r = " +
                                   fmt(r));
        return v;
    }
    case ThetaKind::time_linear:
        return k_ * (p.t - tref_);
    case ThetaKind::time_quadratic:
        return k_ * (p.t * p.t - tref_ * tref_) / 2.0;
    case ThetaKind::tabulated:
        return table_value(p.x[0]);
    case ThetaKind::custom:
        return fn_(p);
    }
    throw domain_error("unreachable field kind");
}

Vec ThetaField::gradient(const Point& p) const {
    switch (kind_) {
    case ThetaKind::constant:
    case ThetaKind::time_linear:
    case ThetaKind::time_quadratic:
        return Vec(dim_);
    case ThetaKind::linear:
        return a_;
    case ThetaKind::radial: {
        const Vec d = p.x - center_;
        const double r = d.norm();
        if (r == 0.0) throw domain_error("radial field gradient at its singular center");
        if (std::fabs(K_) / r > exp_guard)
            throw divergence_error("radial field gradient exceeds the exponent guard");
        return d * (-K_ / (r * r * r));
    }
    case ThetaKind::tabulated: {
        Vec g(1);
        g[0] = table_gradient(p.x[0]);
        return g;
    }
    case ThetaKind::custom:
        return grad_fn_(p);
    }
    throw domain_error("unreachable field kind");
}

double ThetaField::time_derivative(const Point& p) const {
    switch (kind_) {
    case ThetaKind::time_linear:
        return k_;
    case ThetaKind::time_quadratic:
        return k_ * p.t;
    case ThetaKind::custom:
        return dt_fn_ ? dt_fn_(p) : 0.0;
    default:
        return 0.0;
    }
}

VectorField VectorField::gradient_of(const ThetaField& theta) {
    return {[theta](const Point& p) { return theta.gradient(p); }, theta.dim()};
}

VectorField VectorField::custom(std::function<Vec(const Point&)> f, int dim) {
    return {std::move(f), dim};
}

VectorField VectorField::zero(int dim) {
    return {[dim](const Point&) { return Vec(dim); }, dim};
}

double scaling_factor(const ThetaField& theta, const Point& to, const Point& from) {
    const double e = theta.value(to) - theta.value(from);
    if (std::fabs(e) > exp_guard)
        throw divergence_error("scaling factor exponent " + fmt(e) +
                               " exceeds the representable range");
    return std::exp(e);
}

double path_scaling_factor(const VectorField& field, const Curve& path,
                           const QuadratureConfig& quad) {
    auto integrand = [&](double s) {
        double dt_ds;
        Vec dx_ds;
        path.derivative(s, dt_ds, dx_ds);
        return field.at(path.at(s)).dot(dx_ds);
    };
    double exponent = 0.0, comp = 0.0;
    const auto breaks = path.pieces();
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double y = integrate(integrand, breaks[i], breaks[i + 1], quad).value - comp;
        const double t = exponent + y;
        comp = (t - exponent) - y;
        exponent = t;
    }
    if (std::fabs(exponent) > exp_guard)
        throw divergence_error("path scaling exponent exceeds the representable range");
    return std::exp(exponent);
}

double retarded_time(const Point& observer, const Vec& event_position, double c) {
    if (!(c > 0.0)) throw domain_error("signal speed must be positive");
    return observer.t - (event_position - observer.x).norm() / c;
}

double lightcone_scaling(const ThetaField& theta, const Point& observer,
                         const Vec& event_position, double c) {
    if (!theta.time_only())
        throw domain_error("light-cone scaling requires a time-dependent field");
    const double tp = retarded_time(observer, event_position, c);
    return scaling_factor(theta, Point(tp, observer.x), observer);
}

} // namespace thetascale

#include "thetascale/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace thetascale {

namespace {

double horner(const std::vector<double>& c, double s) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
    return acc;
}

double horner_deriv(const std::vector<double>& c, double s) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * s + c[i] * static_cast<double>(i);
    return acc;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Curve Curve::segment(const Point& from, const Point& to) {
    if (from.x.dim != to.x.dim) throw domain_error("segment endpoints have different dimensions");
    Curve c;
    c.kind = CurveKind::segment;
    c.dim = from.x.dim;
    c.from = from;
    c.to = to;
    return c;
}

Curve Curve::polyline(std::vector<Point> pts) {
    if (pts.size() < 2) throw domain_error("polyline needs at least two points");
    Curve c;
    c.kind = CurveKind::polyline;
    c.dim = pts.front().x.dim;
    for (const auto& p : pts)
        if (p.x.dim != c.dim) throw domain_error("polyline points have mixed dimensions");
    c.pts = std::move(pts);
    return c;
}

Curve Curve::polynomial(std::vector<std::vector<double>> coeff) {
    if (coeff.size() < 2 || coeff.size() > 4)
        throw domain_error("polynomial curve needs a t list plus 1..3 coordinate lists");
    for (const auto& c : coeff)
        if (c.empty()) throw domain_error("polynomial coordinate list is empty");
    Curve c;
    c.kind = CurveKind::polynomial;
    c.dim = static_cast<int>(coeff.size()) - 1;
    c.coeff = std::move(coeff);
    return c;
}

Curve Curve::sampled(std::vector<double> s_grid, std::vector<Point> pts) {
    if (s_grid.size() != pts.size() || s_grid.size() < 2)
        throw domain_error("sampled curve needs matching grids of at least two entries");
    if (s_grid.front() != 0.0 || s_grid.back() != 1.0)
        throw domain_error("sampled curve parameter grid must span [0, 1]");
    for (std::size_t i = 1; i < s_grid.size(); ++i)
        if (!(s_grid[i] > s_grid[i - 1]))
            throw domain_error("sampled curve parameter grid must be strictly increasing");
    Curve c;
    c.kind = CurveKind::sampled;
    c.dim = pts.front().x.dim;
    c.pts = std::move(pts);
    c.grid = std::move(s_grid);
    return c;
}

namespace {

// Locate the polyline/sampled segment containing s; returns index i with
// s in [g_i, g_{i+1}].
std::size_t locate(const std::vector<double>& g, double s) {
    std::size_t hi = std::upper_bound(g.begin(), g.end(), s) - g.begin();
    if (hi == 0) hi = 1;
    if (hi >= g.size()) hi = g.size() - 1;
    return hi - 1;
}

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
    return g;
}

} // namespace

Point Curve::at(double s) const {
    switch (kind) {
    case CurveKind::segment: {
        Point p;
        p.t = from.t + s * (to.t - from.t);
        p.x = from.x + (to.x - from.x) * s;
        return p;
    }
    case CurveKind::polyline:
    case CurveKind::sampled: {
        const std::vector<double> g = kind == CurveKind::polyline ? uniform_grid(pts.size()) : grid;
        const std::size_t i = locate(g, s);
        const double u = (s - g[i]) / (g[i + 1] - g[i]);
        Point p;
        p.t = pts[i].t + u * (pts[i + 1].t - pts[i].t);
        p.x = pts[i].x + (pts[i + 1].x - pts[i].x) * u;
        return p;
    }
    case CurveKind::polynomial: {
        Point p;
        p.t = horner(coeff[0], s);
        p.x = Vec(dim);
        for (int j = 0; j < dim; ++j) p.x[j] = horner(coeff[j + 1], s);
        return p;
    }
    }
    throw domain_error("unreachable curve kind");
}

void Curve::derivative(double s, double& dt_ds, Vec& dx_ds) const {
    switch (kind) {
    case CurveKind::segment:
        dt_ds = to.t - from.t;
        dx_ds = to.x - from.x;
        return;
    case CurveKind::polyline:
    case CurveKind::sampled: {
        const std::vector<double> g = kind == CurveKind::polyline ? uniform_grid(pts.size()) : grid;
        const std::size_t i = locate(g, s);
        const double w = g[i + 1] - g[i];
        dt_ds = (pts[i + 1].t - pts[i].t) / w;
        dx_ds = (pts[i + 1].x - pts[i].x) / w;
        return;
    }
    case CurveKind::polynomial:
        dt_ds = horner_deriv(coeff[0], s);
        dx_ds = Vec(dim);
        for (int j = 0; j < dim; ++j) dx_ds[j] = horner_deriv(coeff[j + 1], s);
        return;
    }
    throw domain_error("unreachable curve kind");
}

std::vector<double> Curve::pieces() const {
    switch (kind) {
    case CurveKind::segment:
    case CurveKind::polynomial:
        return {0.0, 1.0};
    case CurveKind::polyline:
        return uniform_grid(pts.size());
    case CurveKind::sampled:
        return grid;
    }
    throw domain_error("unreachable curve kind");
}

namespace {

// Tangent magnitude under the metric's quadratic form, honoring the causal
// mode for indefinite metrics.
double tangent_speed(const Curve& curve, const Metric& metric, double s, LengthMode mode) {
    double dt_ds;
    Vec dx_ds;
    curve.derivative(s, dt_ds, dx_ds);
    const Point p = curve.at(s);

    std::vector<double> v;
    switch (metric.kind) {
    case MetricKind::euclidean:
        if (metric.d != curve.dim)
            throw domain_error("curve dimension does not match metric dimension");
        return dx_ds.norm();
    case MetricKind::minkowski:
        if (metric.d != curve.dim)
            throw domain_error("curve dimension does not match metric dimension");
        v.push_back(dt_ds);
        for (int j = 0; j < curve.dim; ++j) v.push_back(dx_ds[j]);
        break;
    case MetricKind::frw:
        v = {dt_ds, dx_ds[0], curve.dim >= 2 ? dx_ds[1] : 0.0};
        break;
    case MetricKind::general:
        if (metric.general_n == curve.dim) {
            for (int j = 0; j < curve.dim; ++j) v.push_back(dx_ds[j]);
        } else if (metric.general_n == curve.dim + 1) {
            v.push_back(dt_ds);
            for (int j = 0; j < curve.dim; ++j) v.push_back(dx_ds[j]);
        } else {
            throw domain_error("curve dimension does not match metric dimension");
        }
        break;
    }

    const double q = metric_tensor(metric, p).quadratic(v);
    if (mode == LengthMode::proper_time) {
        if (q < -1e-14)
            throw domain_error("spacelike tangent (ds^2 < 0); use the proper-length mode");
        return std::sqrt(std::max(q, 0.0));
    }
    if (q > 1e-14)
        throw domain_error("timelike tangent (ds^2 > 0); use the proper-time mode");
    return std::sqrt(std::max(-q, 0.0));
}

// Integrate per smooth piece with an ordered compensated reduction.
template <typename F>
double piecewise_integral(const Curve& curve, F&& integrand, const QuadratureConfig& quad) {
    double sum = 0.0, comp = 0.0;
    const auto breaks = curve.pieces();
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double piece;
        try {
            piece = integrate(integrand, breaks[i], breaks[i + 1], quad).value;
        } catch (divergence_error& e) {
            if (!std::isnan(e.partial)) e.partial += sum;
            throw;
        }
        const double y = piece - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

double curve_length(const Curve& curve, const Metric& metric, const QuadratureConfig& quad,
                    LengthMode mode) {
    return piecewise_integral(
        curve, [&](double s) { return tangent_speed(curve, metric, s, mode); }, quad);
}

ScaledLength curve_length_scaled(const Curve& curve, const Metric& metric,
                                 const ThetaField& theta, const Point& ref,
                                 const QuadratureConfig& quad, LengthMode mode) {
    const double theta_ref = theta.value(ref);
    auto integrand = [&](double s) {
        const double e = theta.value(curve.at(s)) - theta_ref;
        if (e > exp_guard) {
            divergence_error err("scaled length integrand overflows at s = " + fmt(s));
            throw err;
        }
        return std::exp(e) * tangent_speed(curve, metric, s, mode);
    };
    ScaledLength out;
    out.value = piecewise_integral(curve, integrand, quad);
    out.ref = ref;
    out.theta_id = theta.describe();
    return out;
}

ScaledLength curve_length_scaled_path(const Curve& curve, const VectorField& field,
                                      const QuadratureConfig& quad) {
    const Metric eu = Metric::euclidean(curve.dim);
    auto a_dot_tangent = [&](double s) {
        double dt_ds;
        Vec dx_ds;
        curve.derivative(s, dt_ds, dx_ds);
        return field.at(curve.at(s)).dot(dx_ds);
    };

    const auto breaks = curve.pieces();
    // Running exponent at each piece boundary; within a piece the remainder
    // is integrated adaptively per evaluation.
    std::vector<double> base(breaks.size(), 0.0);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        base[i + 1] = base[i] + integrate(a_dot_tangent, breaks[i], breaks[i + 1], quad).value;

    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto integrand = [&](double s) {
            const double e = base[i] + integrate(a_dot_tangent, breaks[i], s, quad).value;
            if (e > exp_guard) {
                divergence_error err("path-scaled length integrand overflows at s = " + fmt(s));
                throw err;
            }
            return std::exp(e) * tangent_speed(curve, eu, s, LengthMode::proper_time);
        };
        double piece;
        try {
            piece = integrate(integrand, breaks[i], breaks[i + 1], quad).value;
        } catch (divergence_error& e) {
            if (!std::isnan(e.partial)) e.partial += sum;
            throw;
        }
        const double y = piece - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    ScaledLength out;
    out.value = sum;
    out.ref = curve.at(0.0);
    out.theta_id = "path-field";
    return out;
}

ScaledLength transfer_length(const ScaledLength& len, const ThetaField& theta, const Point& to) {
    if (!len.theta_id.empty() && len.theta_id != "path-field" &&
        len.theta_id != theta.describe())
        throw structure_mismatch_error("length was scaled by field '" + len.theta_id +
                                       "', not '" + theta.describe() + "'");
    ScaledLength out;
    out.value = len.value * scaling_factor(theta, len.ref, to);
    out.ref = to;
    out.theta_id = len.theta_id;
    return out;
}

namespace {

// First derivative on a possibly nonuniform 3-point stencil.
double d1(double fm, double f0, double fp, double hl, double hr) {
    return (hl / (hr * (hl + hr))) * fp + ((hr - hl) / (hl * hr)) * f0 -
           (hr / (hl * (hl + hr))) * fm;
}

// Second-order one-sided first derivative at the left end of {f0, f1, f2}
// with spacings h1 = s1-s0, h2 = s2-s1. A first-order end tangent would
// leak an O(1) artifact into the residual of any curved curve.
double d1_left(double f0, double f1, double f2, double h1, double h2) {
    return -((2.0 * h1 + h2) / (h1 * (h1 + h2))) * f0 + ((h1 + h2) / (h1 * h2)) * f1 -
           (h1 / (h2 * (h1 + h2))) * f2;
}

} // namespace

double el_residual(const Curve& curve, const ThetaField& theta,
                   const std::vector<double>& s_grid) {
    const std::size_t n = s_grid.size();
    if (n < 3) throw domain_error("residual grid needs at least three points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(s_grid[i] > s_grid[i - 1]))
            throw domain_error("residual grid must be strictly increasing");

    const int d = curve.dim;
    std::vector<Point> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = curve.at(s_grid[i]);

    // Tangents by differencing: central in the interior, second-order
    // one-sided at the ends.
    std::vector<Vec> tang(n, Vec(d));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            const double h1 = s_grid[1] - s_grid[0];
            const double h2 = s_grid[2] - s_grid[1];
            Vec t(d);
            for (int j = 0; j < d; ++j)
                t[j] = d1_left(p[0].x[j], p[1].x[j], p[2].x[j], h1, h2);
            tang[i] = t;
        } else if (i == n - 1) {
            const double h1 = s_grid[n - 1] - s_grid[n - 2];
            const double h2 = s_grid[n - 2] - s_grid[n - 3];
            Vec t(d);
            for (int j = 0; j < d; ++j)
                t[j] = d1_left(p[n - 1].x[j], p[n - 2].x[j], p[n - 3].x[j], -h1, -h2);
            tang[i] = t;
        } else {
            const double hl = s_grid[i] - s_grid[i - 1];
            const double hr = s_grid[i + 1] - s_grid[i];
            Vec t(d);
            for (int j = 0; j < d; ++j)
                t[j] = d1(p[i - 1].x[j], p[i].x[j], p[i + 1].x[j], hl, hr);
            tang[i] = t;
        }
    }

    std::vector<Vec> unit(n, Vec(d));
    std::vector<double> speed(n);
    for (std::size_t i = 0; i < n; ++i) {
        speed[i] = tang[i].norm();
        if (speed[i] < 1e-12) throw domain_error("degenerate tangent on the residual grid");
        unit[i] = tang[i] / speed[i];
    }

    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Vec a = theta.gradient(p[i]);
        const double dtheta_ds = a.dot(tang[i]);
        const double hl = s_grid[i] - s_grid[i - 1];
        const double hr = s_grid[i + 1] - s_grid[i];
        for (int j = 0; j < d; ++j) {
            const double du = d1(unit[i - 1][j], unit[i][j], unit[i + 1][j], hl, hr);
            const double res = a[j] * speed[i] - dtheta_ds * unit[i][j] - du;
            worst = std::max(worst, std::fabs(res));
        }
    }
    return worst;
}

} // namespace thetascale

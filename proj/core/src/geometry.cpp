#include "thetascale/geometry.hpp"

#include <cmath>

namespace thetascale {

double SymMatrix::quadratic(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != n)
        throw domain_error("displacement dimension does not match metric dimension");
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += g[i][j] * v[i] * v[j];
    return acc;
}

int Metric::coords() const {
    switch (kind) {
    case MetricKind::euclidean: return d;
    case MetricKind::minkowski: return d + 1;
    case MetricKind::frw: return 3;
    case MetricKind::general: return general_n;
    }
    return 0;
}

double Metric::scale_a(double t) const {
    double acc = 0.0;
    for (std::size_t i = frw_a_coeff.size(); i-- > 0;) acc = acc * t + frw_a_coeff[i];
    return acc;
}

Metric Metric::euclidean(int d) {
    if (d < 1 || d > 3) throw domain_error("euclidean dimension must be 1..3");
    Metric m;
    m.kind = MetricKind::euclidean;
    m.d = d;
    return m;
}

Metric Metric::minkowski(int d) {
    if (d < 1 || d > 3) throw domain_error("minkowski spatial dimension must be 1..3");
    Metric m;
    m.kind = MetricKind::minkowski;
    m.d = d;
    return m;
}

Metric Metric::frw(double k, std::vector<double> a_coeff) {
    if (a_coeff.empty()) throw domain_error("scale function needs at least one coefficient");
    Metric m;
    m.kind = MetricKind::frw;
    m.frw_k = k;
    m.frw_a_coeff = std::move(a_coeff);
    return m;
}

Metric Metric::general(std::function<SymMatrix(const Point&)> g, int n) {
    if (n < 1 || n > 4) throw domain_error("general metric dimension must be 1..4");
    Metric m;
    m.kind = MetricKind::general;
    m.general_g = std::move(g);
    m.general_n = n;
    return m;
}

std::string Metric::describe() const {
    switch (kind) {
    case MetricKind::euclidean: return "euclidean:" + std::to_string(d);
    case MetricKind::minkowski: return "minkowski:" + std::to_string(d);
    case MetricKind::frw: return "frw";
    case MetricKind::general: return "general";
    }
    return "";
}

const char* to_string(CausalClass c) {
    switch (c) {
    case CausalClass::timelike: return "timelike";
    case CausalClass::lightlike: return "lightlike";
    case CausalClass::spacelike: return "spacelike";
    case CausalClass::euclidean: return "euclidean";
    }
    return "";
}

SymMatrix metric_tensor(const Metric& metric, const Point& at) {
    SymMatrix m;
    switch (metric.kind) {
    case MetricKind::euclidean:
        m.n = metric.d;
        for (int i = 0; i < m.n; ++i) m.g[i][i] = 1.0;
        return m;
    case MetricKind::minkowski:
        m.n = metric.d + 1;
        m.g[0][0] = 1.0;
        for (int i = 1; i < m.n; ++i) m.g[i][i] = -1.0;
        return m;
    case MetricKind::frw: {
        m.n = 3;
        const double r = at.x[0];
        const double denom = 1.0 - metric.frw_k * r * r;
        if (denom <= 0.0)
            throw domain_error("curvature coordinate domain violated: 1 - k r^2 <= 0 at r = " +
                               std::to_string(r));
        const double a = metric.scale_a(at.t);
        m.g[0][0] = 1.0;
        m.g[1][1] = -a * a / denom;
        m.g[2][2] = -a * a * r * r;
        return m;
    }
    case MetricKind::general:
        return metric.general_g(at);
    }
    throw domain_error("unreachable metric kind");
}

double line_element(const Metric& metric, const Point& at, const std::vector<double>& disp) {
    return metric_tensor(metric, at).quadratic(disp);
}

LineElementResult scaled_line_element(const Metric& metric, const ThetaField& theta,
                                      const Point& at, const std::vector<double>& disp,
                                      const Point& ref) {
    LineElementResult out;
    out.unscaled = line_element(metric, at, disp);
    out.factor = scaling_factor(theta, at, ref);
    out.scaled = out.factor * out.unscaled;
    out.causal = causal_class(out.unscaled, metric.kind);
    return out;
}

SymMatrix scaled_metric_tensor(const Metric& metric, const ThetaField& theta, const Point& at,
                               const Point& ref) {
    SymMatrix m = metric_tensor(metric, at);
    const double r = scaling_factor(theta, at, ref);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.g[i][j] *= r;
    return m;
}

CausalClass causal_class(double ds2, MetricKind kind) {
    if (kind == MetricKind::euclidean) return CausalClass::euclidean;
    if (std::fabs(ds2) <= 1e-14) return CausalClass::lightlike;
    return ds2 > 0.0 ? CausalClass::timelike : CausalClass::spacelike;
}

} // namespace thetascale

#include "thetascale/geodesics.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <vector>

namespace thetascale {

namespace {

struct Problem {
    const ThetaField* theta;
    const Metric* metric;
    Point from, to;
    int N; // interior nodes
    int d;
    double theta_ref;
    bool euclid;

    int vars() const { return N * d; }

    std::vector<Point> assemble(const std::vector<double>& x) const {
        std::vector<Point> nodes(N + 2);
        nodes.front() = from;
        nodes.back() = to;
        for (int i = 0; i < N; ++i) {
            Point p;
            const double f = static_cast<double>(i + 1) / (N + 1);
            p.t = from.t + f * (to.t - from.t);
            p.x = Vec(d);
            for (int j = 0; j < d; ++j) p.x[j] = x[i * d + j];
            nodes[i + 1] = p;
        }
        return nodes;
    }

    double phi(const Point& p) const {
        const double e = theta->value(p) - theta_ref;
        if (e > exp_guard) {
            divergence_error err("scaled length objective overflows near a field singularity");
            throw err;
        }
        return e;
    }

    // Objective: sum over segments of the 8-point Gauss approximation of
    // the scaled segment length.
    double objective(const std::vector<Point>& nodes) const {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const Point& a = nodes[i];
            const Point& b = nodes[i + 1];
            const Vec delta = b.x - a.x;
            const double len = delta.norm();
            if (len < 1e-300) continue;
            double seg = 0.0;
            for (int k = 0; k < 8; ++k) {
                const double u = 0.5 + 0.5 * detail::gl8_x[k];
                Point p;
                p.t = a.t + u * (b.t - a.t);
                p.x = a.x + delta * u;
                double w = std::exp(phi(p));
                if (!euclid) {
                    std::vector<double> v(d);
                    for (int j = 0; j < d; ++j) v[j] = delta[j];
                    const double q = metric_tensor(*metric, p).quadratic(v);
                    if (q < 0.0) throw domain_error("general metric is not positive definite");
                    w *= std::sqrt(q);
                }
                seg += 0.5 * detail::gl8_w[k] * w;
            }
            acc += euclid ? len * seg : seg;
        }
        return acc;
    }

    // Analytic gradient for the euclidean case.
    void gradient_euclid(const std::vector<Point>& nodes, std::vector<double>& g) const {
        g.assign(vars(), 0.0);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const Point& a = nodes[i];
            const Point& b = nodes[i + 1];
            const Vec delta = b.x - a.x;
            const double len = delta.norm();
            if (len < 1e-300) continue;
            double g0 = 0.0;
            Vec ga(d), gb(d);
            for (int k = 0; k < 8; ++k) {
                const double u = 0.5 + 0.5 * detail::gl8_x[k];
                const double w = 0.5 * detail::gl8_w[k];
                Point p;
                p.t = a.t + u * (b.t - a.t);
                p.x = a.x + delta * u;
                const double f = w * std::exp(phi(p));
                g0 += f;
                const Vec grad = theta->gradient(p);
                ga += grad * (f * (1.0 - u));
                gb += grad * (f * u);
            }
            // d(seg)/da_j = -(delta_j/len) g0 + len * ga_j, same with + for b.
            if (i >= 1) {
                const int base = static_cast<int>(i - 1) * d;
                for (int j = 0; j < d; ++j)
                    g[base + j] += -(delta[j] / len) * g0 + len * ga[j];
            }
            if (i + 1 <= static_cast<std::size_t>(N)) {
                const int base = static_cast<int>(i) * d;
                for (int j = 0; j < d; ++j)
                    g[base + j] += (delta[j] / len) * g0 + len * gb[j];
            }
        }
    }

    void gradient_fd(const std::vector<double>& x, std::vector<double>& g) const {
        g.assign(vars(), 0.0);
        std::vector<double> xt = x;
        for (int i = 0; i < vars(); ++i) {
            const double h = 1e-6 * std::max(1.0, std::fabs(x[i]));
            xt[i] = x[i] + h;
            const double fp = objective(assemble(xt));
            xt[i] = x[i] - h;
            const double fm = objective(assemble(xt));
            xt[i] = x[i];
            g[i] = (fp - fm) / (2.0 * h);
        }
    }

    double eval(const std::vector<double>& x, std::vector<double>& g) const {
        const auto nodes = assemble(x);
        const double j = objective(nodes);
        if (euclid)
            gradient_euclid(nodes, g);
        else
            gradient_fd(x, g);
        return j;
    }
};

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Node-spacing imbalance: longest over shortest segment.
double spacing_ratio(const std::vector<double>& x, const Problem& prob) {
    const auto nodes = prob.assemble(x);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double len = (nodes[i].x - nodes[i - 1].x).norm();
        lo = std::min(lo, len);
        hi = std::max(hi, len);
    }
    return lo < 1e-300 ? std::numeric_limits<double>::infinity() : hi / lo;
}

// Redistribute interior nodes uniformly in (unscaled) arc length.
void reparameterize(std::vector<double>& x, const Problem& prob) {
    const auto nodes = prob.assemble(x);
    const std::size_t m = nodes.size();
    std::vector<double> cum(m, 0.0);
    for (std::size_t i = 1; i < m; ++i)
        cum[i] = cum[i - 1] + (nodes[i].x - nodes[i - 1].x).norm();
    if (cum.back() < 1e-300) return;
    std::size_t k = 0;
    for (int i = 0; i < prob.N; ++i) {
        const double target = cum.back() * static_cast<double>(i + 1) / (prob.N + 1);
        while (k + 2 < m && cum[k + 1] < target) ++k;
        const double w = cum[k + 1] - cum[k];
        const double u = w < 1e-300 ? 0.0 : (target - cum[k]) / w;
        const Vec p = nodes[k].x + (nodes[k + 1].x - nodes[k].x) * u;
        for (int j = 0; j < prob.d; ++j) x[i * prob.d + j] = p[j];
    }
}

} // namespace

GeodesicResult geodesic(const Point& from, const Point& to, const ThetaField& theta,
                        const Metric& metric, int N, const QuadratureConfig& quad,
                        const GeodesicOptions& opt) {
    if (from.x.dim != to.x.dim) throw domain_error("endpoint dimensions differ");
    if (N < 3) throw domain_error("geodesic needs at least three interior nodes");
    const int d = from.x.dim;
    if (metric.kind == MetricKind::minkowski || metric.kind == MetricKind::frw)
        throw domain_error("geodesic search requires a positive-definite metric "
                           "(euclidean or general)");
    if (metric.kind == MetricKind::euclidean && metric.d != d)
        throw domain_error("curve dimension does not match metric dimension");
    if (metric.kind == MetricKind::general && metric.general_n != d)
        throw domain_error("general metric must act on the spatial coordinates");

    Problem prob{&theta, &metric, from, to, N, d, theta.value(from),
                 metric.kind == MetricKind::euclidean};

    // Straight chord initialization, uniform spacing.
    std::vector<double> x(prob.vars());
    for (int i = 0; i < N; ++i) {
        const double f = static_cast<double>(i + 1) / (N + 1);
        for (int j = 0; j < d; ++j) x[i * d + j] = from.x[j] + f * (to.x[j] - from.x[j]);
    }

    std::vector<double> g;
    double J = prob.eval(x, g);

    std::deque<std::vector<double>> hist_s, hist_y;
    std::vector<double> alpha_buf;
    int iter = 0;
    int since_reparam = 0;
    int flat_steps = 0;
    bool stalled = false;

    while (iter < opt.max_iterations) {
        const double gscale = std::max(1.0, std::fabs(J));
        if (inf_norm(g) <= opt.grad_tol * gscale) break;

        // Two-loop recursion for the quasi-Newton direction.
        std::vector<double> q = g;
        const std::size_t m = hist_s.size();
        alpha_buf.assign(m, 0.0);
        for (std::size_t i = m; i-- > 0;) {
            const double rho = 1.0 / dot(hist_y[i], hist_s[i]);
            alpha_buf[i] = rho * dot(hist_s[i], q);
            for (std::size_t k = 0; k < q.size(); ++k) q[k] -= alpha_buf[i] * hist_y[i][k];
        }
        if (m > 0) {
            const double gamma =
                dot(hist_s[m - 1], hist_y[m - 1]) / dot(hist_y[m - 1], hist_y[m - 1]);
            for (double& v : q) v *= gamma;
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double rho = 1.0 / dot(hist_y[i], hist_s[i]);
            const double beta = rho * dot(hist_y[i], q);
            for (std::size_t k = 0; k < q.size(); ++k)
                q[k] += hist_s[i][k] * (alpha_buf[i] - beta);
        }
        std::vector<double> dir(q.size());
        for (std::size_t k = 0; k < q.size(); ++k) dir[k] = -q[k];
        double slope = dot(dir, g);
        if (slope >= 0.0) {
            for (std::size_t k = 0; k < dir.size(); ++k) dir[k] = -g[k];
            slope = -dot(g, g);
        }

        // Backtracking line search; steps into the singular region count as
        // infeasible and shrink, a fully blocked search rethrows.
        double step = 1.0;
        std::vector<double> xt(x.size()), gt;
        double Jt = J;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t k = 0; k < x.size(); ++k) xt[k] = x[k] + step * dir[k];
            try {
                Jt = prob.eval(xt, gt);
            } catch (const divergence_error&) {
                if (step < 1e-14) throw;
                step *= 0.5;
                continue;
            }
            if (Jt <= J + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        ++iter;
        if (!accepted) {
            stalled = true;
            break;
        }

        std::vector<double> s(x.size()), yv(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
            s[k] = xt[k] - x[k];
            yv[k] = gt[k] - g[k];
        }
        const double sy = dot(s, yv);
        if (sy > 1e-12 * std::sqrt(dot(s, s)) * std::sqrt(dot(yv, yv))) {
            hist_s.push_back(std::move(s));
            hist_y.push_back(std::move(yv));
            if (static_cast<int>(hist_s.size()) > opt.memory) {
                hist_s.pop_front();
                hist_y.pop_front();
            }
        }
        x.swap(xt);
        g.swap(gt);

        // The objective is nearly flat along tangential node motion, so the
        // gradient can stay above grad_tol long after the value has stopped
        // moving. Treat a sustained noise-level plateau as stationary.
        if (std::fabs(J - Jt) <= 1e-14 * std::max(1.0, std::fabs(Jt)))
            ++flat_steps;
        else
            flat_steps = 0;
        J = Jt;
        if (flat_steps >= 10) break;

        // Redistribute only on real clustering; a blanket reset would keep
        // disturbing an already stationary node set.
        if (++since_reparam >= opt.reparam_interval) {
            since_reparam = 0;
            if (spacing_ratio(x, prob) > 4.0) {
                reparameterize(x, prob);
                hist_s.clear();
                hist_y.clear();
                J = prob.eval(x, g);
            }
        }
    }

    // Final assessment on the converged node set.
    if (spacing_ratio(x, prob) > 4.0) reparameterize(x, prob);
    const auto nodes = prob.assemble(x);
    Curve poly = Curve::polyline(nodes);

    GeodesicResult out;
    out.curve = poly;
    out.iterations = iter;
    out.length = curve_length_scaled(poly, metric, theta, from, quad);
    if (prob.euclid) {
        std::vector<double> sg(nodes.size());
        for (std::size_t i = 0; i < sg.size(); ++i)
            sg[i] = static_cast<double>(i) / (sg.size() - 1);
        out.el_residual = el_residual(poly, theta, sg);
        out.converged = out.el_residual <= opt.residual_tol;
    } else {
        prob.eval(x, g);
        out.el_residual = inf_norm(g) / std::max(1.0, std::fabs(J));
        out.converged = out.el_residual <= opt.grad_tol * 1e2 || !stalled;
    }

    if (iter >= opt.max_iterations && !out.converged) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", out.length.value);
        throw convergence_error("geodesic search exhausted its iteration budget; "
                                "best length so far " +
                                std::string(buf));
    }
    return out;
}

double distance(const Point& from, const Point& to, const ThetaField& theta,
                const Metric& metric, int N, const QuadratureConfig& quad,
                const GeodesicOptions& opt) {
    if (from.x.dim == to.x.dim && (from.x - to.x).norm() == 0.0) return 0.0;
    return geodesic(from, to, theta, metric, N, quad, opt).length.value;
}

} // namespace thetascale

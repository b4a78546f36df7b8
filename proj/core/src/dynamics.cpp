#include "thetascale/dynamics.hpp"

#include <cmath>
#include <string>

namespace thetascale {

Lagrangian Lagrangian::free(double m) {
    if (!(m > 0.0)) throw domain_error("mass must be positive");
    Lagrangian l;
    l.m = m;
    return l;
}

Lagrangian Lagrangian::with_potential(double m, std::function<double(const Vec&)> V,
                                      std::function<Vec(const Vec&)> gradV) {
    if (!(m > 0.0)) throw domain_error("mass must be positive");
    Lagrangian l;
    l.m = m;
    l.has_potential = true;
    l.V = std::move(V);
    l.gradV = std::move(gradV);
    return l;
}

Lagrangian Lagrangian::harmonic(double m, double k) {
    return with_potential(
        m, [k](const Vec& x) { return 0.5 * k * x.norm2(); },
        [k](const Vec& x) { return x * k; });
}

double scaled_action(const Curve& path, const Lagrangian& L, const ThetaField& theta,
                     const Point& ref, const QuadratureConfig& quad) {
    const double theta_ref = theta.value(ref);
    auto integrand = [&](double s) {
        double dt_ds;
        Vec dx_ds;
        path.derivative(s, dt_ds, dx_ds);
        if (!(dt_ds > 0.0))
            throw domain_error("action path must have strictly increasing time");
        const Point p = path.at(s);
        const double e = theta.value(p) - theta_ref;
        if (e > exp_guard) {
            divergence_error err("scaled action integrand overflows");
            throw err;
        }
        const Vec vel = dx_ds / dt_ds;
        return std::exp(e) * L.value(p.x, vel) * dt_ds;
    };
    double sum = 0.0, comp = 0.0;
    const auto breaks = path.pieces();
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double y = integrate(integrand, breaks[i], breaks[i + 1], quad).value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

Vec eom_acceleration(const Lagrangian& L, const ThetaField& theta, double t, const Vec& x,
                     const Vec& v) {
    const Point p(t, x);
    const Vec a = theta.gradient(p);
    const double lagr = L.value(x, v);
    const double dtheta_dt = theta.time_derivative(p) + a.dot(v);
    Vec acc = a * (lagr / L.m) - v * dtheta_dt;
    if (L.has_potential) acc += L.gradV(x) * (-1.0 / L.m);
    return acc;
}

Trajectory integrate_eom(const Lagrangian& L, const ThetaField& theta, const Vec& x0,
                         const Vec& v0, double t0, double t_end, double dt) {
    if (!(dt > 0.0)) throw domain_error("time step must be positive");
    if (!(t_end > t0)) throw domain_error("end time must exceed start time");
    const auto steps = static_cast<std::size_t>(std::ceil((t_end - t0) / dt - 1e-9));

    Trajectory out;
    out.t.reserve(steps + 1);
    out.x.reserve(steps + 1);
    out.v.reserve(steps + 1);
    Vec x = x0, v = v0;
    out.t.push_back(t0);
    out.x.push_back(x);
    out.v.push_back(v);

    for (std::size_t i = 0; i < steps; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        const double h = std::min(dt, t_end - t);
        try {
            const Vec k1x = v;
            const Vec k1v = eom_acceleration(L, theta, t, x, v);
            const Vec k2x = v + k1v * (h / 2);
            const Vec k2v = eom_acceleration(L, theta, t + h / 2, x + k1x * (h / 2), v + k1v * (h / 2));
            const Vec k3x = v + k2v * (h / 2);
            const Vec k3v = eom_acceleration(L, theta, t + h / 2, x + k2x * (h / 2), v + k2v * (h / 2));
            const Vec k4x = v + k3v * h;
            const Vec k4v = eom_acceleration(L, theta, t + h, x + k3x * h, v + k3v * h);
            x += (k1x + k2x * 2.0 + k3x * 2.0 + k4x) * (h / 6);
            v += (k1v + k2v * 2.0 + k3v * 2.0 + k4v) * (h / 6);
        } catch (const error& e) {
            throw domain_error("field singularity at t = " + std::to_string(t) +
                               " after " + std::to_string(i) + " steps: " + e.what());
        }
        out.t.push_back(t + h);
        out.x.push_back(x);
        out.v.push_back(v);
    }
    return out;
}

double covariant_derivative(const std::function<double(const Point&)>& f,
                            const std::function<double(const Point&)>& df_j,
                            const ThetaField& theta, const Point& at, int axis) {
    if (axis < 0 || axis >= at.x.dim) throw domain_error("derivative axis out of range");
    return df_j(at) + theta.gradient(at)[axis] * f(at);
}

double covariant_derivative(const SampledFn& f, const ThetaField& theta, const Point& base,
                            int axis, std::size_t index) {
    const std::size_t n = f.grid.size();
    if (n < 3 || f.values.size() != n)
        throw domain_error("sampled stencil needs at least three matching grid points");
    if (index == 0 || index + 1 >= n)
        throw domain_error("sampled stencil is one-sided at the requested index");
    const double df = (f.values[index + 1] - f.values[index - 1]) /
                      (f.grid[index + 1] - f.grid[index - 1]);
    Point p = base;
    p.x[axis] = f.grid[index];
    return df + theta.gradient(p)[axis] * f.values[index];
}

namespace {

// First derivative of complex samples on a uniform grid: central inside,
// second-order one-sided at the ends.
std::vector<std::complex<double>> grid_derivative(const std::vector<std::complex<double>>& psi,
                                                  double h) {
    const std::size_t n = psi.size();
    std::vector<std::complex<double>> d(n);
    d[0] = (-3.0 * psi[0] + 4.0 * psi[1] - psi[2]) / (2.0 * h);
    d[n - 1] = (3.0 * psi[n - 1] - 4.0 * psi[n - 2] + psi[n - 3]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
    return d;
}

std::vector<std::complex<double>> covariant_apply(const std::vector<std::complex<double>>& psi,
                                                  const std::vector<double>& grid,
                                                  const ThetaField& theta, const Point& base,
                                                  int axis) {
    const std::size_t n = grid.size();
    if (n < 5 || psi.size() != n)
        throw domain_error("momentum stencil needs at least five uniform grid points");
    const double h = grid[1] - grid[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs(grid[i] - grid[i - 1] - h) > 1e-9 * std::fabs(h))
            throw domain_error("momentum stencil requires a uniform grid");

    auto out = grid_derivative(psi, h);
    for (std::size_t i = 0; i < n; ++i) {
        Point p = base;
        p.x[axis] = grid[i];
        out[i] += theta.gradient(p)[axis] * psi[i];
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> momentum_apply(const std::vector<std::complex<double>>& psi,
                                                 const std::vector<double>& grid,
                                                 const ThetaField& theta, const Point& base,
                                                 double hbar, int axis) {
    auto out = covariant_apply(psi, grid, theta, base, axis);
    const std::complex<double> ih(0.0, hbar);
    for (auto& v : out) v *= ih;
    return out;
}

std::vector<std::complex<double>> kinetic_apply(const std::vector<std::complex<double>>& psi,
                                                const std::vector<double>& grid,
                                                const ThetaField& theta, const Point& base,
                                                double hbar, double m, int axis) {
    if (!(m > 0.0)) throw domain_error("mass must be positive");
    auto d2 = covariant_apply(covariant_apply(psi, grid, theta, base, axis), grid, theta, base,
                              axis);
    const double scale = -hbar * hbar / (2.0 * m);
    for (auto& v : d2) v *= scale;
    return d2;
}

} // namespace thetascale

#include "thetascale/quantum.hpp"

#include <cmath>

#include "thetascale/dynamics.hpp"

namespace thetascale {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;
}

WavePacket WavePacket::gaussian(const Vec& mu, const Vec& sigma) {
    if (mu.dim != sigma.dim) throw domain_error("gaussian mean and width dimensions differ");
    for (int j = 0; j < sigma.dim; ++j)
        if (!(sigma[j] > 0.0)) throw domain_error("gaussian width must be positive");
    WavePacket p;
    p.kind = PacketKind::gaussian;
    p.dim = mu.dim;
    p.mu = mu;
    p.sigma = sigma;
    return p;
}

WavePacket WavePacket::sampled(std::vector<double> grid,
                               std::vector<std::complex<double>> amp) {
    if (grid.size() < 2 || grid.size() != amp.size())
        throw domain_error("sampled packet needs matching grid and amplitude lists");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw domain_error("sampled packet grid must be strictly increasing");
    WavePacket p;
    p.kind = PacketKind::sampled;
    p.dim = 1;
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double h = grid[i + 1] - grid[i];
        mass += 0.5 * h * (std::norm(amp[i]) + std::norm(amp[i + 1]));
    }
    p.normalized = std::fabs(mass - 1.0) <= 1e-6;
    p.grid = std::move(grid);
    p.amp = std::move(amp);
    return p;
}

const char* to_string(Quantity q) {
    switch (q) {
    case Quantity::norm: return "norm";
    case Quantity::position: return "position";
    case Quantity::momentum: return "momentum";
    }
    return "";
}

namespace {

double pdf(double y, double mu, double sigma) {
    const double z = (y - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(two_pi));
}

// Adaptive integral over an axis with the bounds pushed outward until the
// tails stop contributing; raises divergence when they never do.
double axis_integral(const std::function<double(double)>& f, double mu, double sigma,
                     const QuadratureConfig& quad) {
    double lo = mu - 8.0 * sigma;
    double hi = mu + 8.0 * sigma;
    double acc = integrate(f, lo, hi, quad).value;
    for (int round = 0; round < 60; ++round) {
        const double cl = integrate(f, lo - 4.0 * sigma, lo, quad).value;
        const double cr = integrate(f, hi, hi + 4.0 * sigma, quad).value;
        lo -= 4.0 * sigma;
        hi += 4.0 * sigma;
        acc += cl + cr;
        if (std::fabs(cl) + std::fabs(cr) <=
            std::max(quad.abs_tol, quad.rel_tol * std::fabs(acc)))
            return acc;
    }
    throw divergence_error("scaled density does not decay; the field grows faster than the "
                           "packet falls off");
}

// Per-axis exponent weight of theta relative to the reference, for the kinds
// whose spatial dependence factorizes across axes.
struct Separation {
    // weight(j, y): extra exponent on axis j at coordinate y
    std::function<double(int, double)> weight;
    double constant; // exponent part independent of the integration variables
};

Separation separate(const ThetaField& theta, const Point& ref, int dim) {
    const double theta_ref = theta.value(ref);
    switch (theta.kind()) {
    case ThetaKind::constant:
    case ThetaKind::time_linear:
    case ThetaKind::time_quadratic: {
        // Spatially uniform: evaluate at the reference time, any position.
        Point probe = ref;
        const double c = theta.value(probe) - theta_ref;
        return {[](int, double) { return 0.0; }, c};
    }
    case ThetaKind::linear: {
        const Point probe(ref.t, Vec(dim));
        ThetaField copy = theta;
        return {[copy, probe](int j, double y) {
                    Point p = probe;
                    p.x[j] = y;
                    return copy.value(p);
                },
                -theta_ref};
    }
    case ThetaKind::tabulated: {
        ThetaField copy = theta;
        const double t = ref.t;
        return {[copy, t](int j, double y) {
                    if (j != 0) return 0.0;
                    return copy.value(Point(t, Vec(y, 0, 0, 1)));
                },
                -theta_ref};
    }
    default:
        throw domain_error("field does not separate across axes for a gaussian packet in "
                           "d > 1; use the sampled packet form");
    }
}

// The linear branch above returns a.x_j + b on every axis probe, which would
// count b once per axis. Compensate by subtracting it dim-1 times.
double linear_offset_correction(const ThetaField& theta, const Point& ref, int dim) {
    if (theta.kind() != ThetaKind::linear || dim <= 1) return 0.0;
    Point origin(ref.t, Vec(dim));
    return -static_cast<double>(dim - 1) * theta.value(origin);
}

double gaussian_expectation(const WavePacket& psi, const ThetaField& theta, const Point& ref,
                            int weight_axis, bool with_position, const QuadratureConfig& quad) {
    const int dim = psi.dim;
    const double theta_ref = theta.value(ref);

    if (dim == 1) {
        // Generic path: any field that is finite along the axis.
        auto f = [&](double y) {
            const Point p(ref.t, Vec(y, 0, 0, 1));
            const double e = theta.value(p) - theta_ref;
            if (e > exp_guard) {
                divergence_error err("scaled density overflows");
                throw err;
            }
            const double w = with_position && weight_axis == 0 ? y : 1.0;
            return std::exp(e) * w * pdf(y, psi.mu[0], psi.sigma[0]);
        };
        return axis_integral(f, psi.mu[0], psi.sigma[0], quad);
    }

    const Separation sep = separate(theta, ref, dim);
    double acc = 1.0;
    for (int j = 0; j < dim; ++j) {
        auto f = [&, j](double y) {
            const double e = sep.weight(j, y);
            if (e > exp_guard) {
                divergence_error err("scaled density overflows");
                throw err;
            }
            const double w = with_position && weight_axis == j ? y : 1.0;
            return std::exp(e) * w * pdf(y, psi.mu[j], psi.sigma[j]);
        };
        acc *= axis_integral(f, psi.mu[j], psi.sigma[j], quad);
    }
    const double c = sep.constant + linear_offset_correction(theta, ref, dim);
    if (c > exp_guard) throw divergence_error("scaled density constant factor overflows");
    return acc * std::exp(c);
}

double sampled_expectation(const WavePacket& psi, const ThetaField& theta, const Point& ref,
                           bool with_position) {
    const double theta_ref = theta.value(ref);
    double sum = 0.0, comp = 0.0;
    const std::size_t n = psi.grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double y = psi.grid[i];
        const double wtrap = 0.5 * ((i + 1 < n ? psi.grid[i + 1] - y : 0.0) +
                                    (i > 0 ? y - psi.grid[i - 1] : 0.0));
        const Point p(ref.t, Vec(y, 0, 0, 1));
        const double e = theta.value(p) - theta_ref;
        if (e > exp_guard) throw divergence_error("scaled density overflows on the grid");
        const double term =
            wtrap * std::exp(e) * std::norm(psi.amp[i]) * (with_position ? y : 1.0);
        const double yk = term - comp;
        const double t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
    }
    return sum;
}

} // namespace

ScaledExpectation scaled_norm(const WavePacket& psi, const ThetaField& theta, const Point& ref,
                              const QuadratureConfig& quad) {
    ScaledExpectation out;
    out.quantity = Quantity::norm;
    out.ref = ref;
    out.theta_id = theta.describe();
    out.value = psi.kind == PacketKind::gaussian
                    ? gaussian_expectation(psi, theta, ref, 0, false, quad)
                    : sampled_expectation(psi, theta, ref, false);
    return out;
}

ScaledExpectation scaled_position(const WavePacket& psi, const ThetaField& theta,
                                  const Point& ref, int axis, const QuadratureConfig& quad) {
    if (axis < 0 || axis >= psi.dim) throw domain_error("position axis out of range");
    ScaledExpectation out;
    out.quantity = Quantity::position;
    out.axis = axis;
    out.ref = ref;
    out.theta_id = theta.describe();
    out.value = psi.kind == PacketKind::gaussian
                    ? gaussian_expectation(psi, theta, ref, axis, true, quad)
                    : sampled_expectation(psi, theta, ref, true);
    return out;
}

ScaledExpectation scaled_momentum(const WavePacket& psi, const ThetaField& theta,
                                  const Point& ref, double hbar, const QuadratureConfig&) {
    if (psi.kind != PacketKind::sampled)
        throw domain_error("momentum expectation requires a sampled packet");
    const auto p_psi =
        momentum_apply(psi.amp, psi.grid, theta, Point(ref.t, Vec(1)), hbar, 0);
    const double theta_ref = theta.value(ref);
    double sum = 0.0, comp = 0.0;
    const std::size_t n = psi.grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double y = psi.grid[i];
        const double wtrap = 0.5 * ((i + 1 < n ? psi.grid[i + 1] - y : 0.0) +
                                    (i > 0 ? y - psi.grid[i - 1] : 0.0));
        const Point p(ref.t, Vec(y, 0, 0, 1));
        const double e = theta.value(p) - theta_ref;
        if (e > exp_guard) throw divergence_error("scaled density overflows on the grid");
        const double term =
            wtrap * std::exp(e) * (std::conj(psi.amp[i]) * p_psi[i]).real();
        const double yk = term - comp;
        const double t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
    }
    ScaledExpectation out;
    out.quantity = Quantity::momentum;
    out.ref = ref;
    out.theta_id = theta.describe();
    out.value = sum;
    return out;
}

ScaledExpectation transfer_expectation(const ScaledExpectation& e, const ThetaField& theta,
                                       const Point& to) {
    if (!e.theta_id.empty() && e.theta_id != theta.describe())
        throw structure_mismatch_error("expectation was scaled by field '" + e.theta_id +
                                       "', not '" + theta.describe() + "'");
    ScaledExpectation out = e;
    out.value = e.value * scaling_factor(theta, e.ref, to);
    out.ref = to;
    return out;
}

} // namespace thetascale

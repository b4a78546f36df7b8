#include "thetascale/holes.hpp"

#include <cmath>

#include "thetascale/theta_field.hpp"

namespace thetascale {

double HoleSpec::l() const {
    const double v = (z.x - center.x).norm();
    if (!(v > 0.0)) throw domain_error("hole reference must sit away from the center");
    return v;
}

double HoleSpec::lprime_or_default() const {
    if (lprime > 0.0) return lprime;
    const double v = 2.0 * std::fabs(K) - l();
    if (!(v > 0.0))
        throw domain_error("default outward endpoint is degenerate; give lprime explicitly");
    return v;
}

HoleSpec HoleSpec::axial(double K, double l, HoleDirection dir, double lprime) {
    if (!(l > 0.0)) throw domain_error("hole scale l must be positive");
    HoleSpec s;
    s.K = K;
    s.center = Point(0.0, Vec(0.0, 0.0, 0.0, 3));
    s.z = Point(0.0, Vec(l, 0.0, 0.0, 3));
    s.direction = dir;
    s.lprime = lprime;
    return s;
}

namespace {

struct Reduced {
    double kappa;  // K / l
    double rho;    // l' / l (outward only)
    double unit;   // output length unit: l or l'
    double cap;    // largest admissible s
};

Reduced reduce(const HoleSpec& spec, const QuadratureConfig& quad) {
    if (spec.K == 0.0) throw domain_error("hole strength K must be nonzero");
    Reduced r;
    const double l = spec.l();
    r.kappa = spec.K / l;
    if (spec.direction == HoleDirection::inward) {
        r.rho = 0.0;
        r.unit = l;
        r.cap = 1.0;
        if (r.kappa > 0.0) {
            // Exponent kappa (1/(1-s) - 1) stays under the guard until
            // s = 1 - kappa/(guard + kappa); never integrate past the clip.
            const double guard_cap = 1.0 - r.kappa / (exp_guard + r.kappa);
            r.cap = std::min(1.0 - quad.singularity_clip, guard_cap);
        }
    } else {
        const double lp = spec.lprime_or_default();
        r.rho = lp / l;
        r.unit = lp;
        r.cap = 1.0;
    }
    return r;
}

double exponent(const Reduced& r, bool inward, double s) {
    if (inward) return r.kappa * (1.0 / (1.0 - s) - 1.0);
    return r.kappa * (1.0 / (1.0 + s * r.rho) - 1.0);
}

} // namespace

HoleValue hole_scaled_distance(const HoleSpec& spec, double w, const QuadratureConfig& quad) {
    if (w < 0.0 || w > 1.0) throw domain_error("profile fraction w must lie in [0, 1]");
    const bool inward = spec.direction == HoleDirection::inward;
    const Reduced r = reduce(spec, quad);
    auto f = [&](double s) { return std::exp(exponent(r, inward, s)); };
    HoleValue out;
    out.divergent = w > r.cap;
    out.value = r.unit * integrate(f, 0.0, std::min(w, r.cap), quad).value;
    return out;
}

std::vector<ProfileRow> hole_profile(const HoleSpec& spec, int samples,
                                     const QuadratureConfig& quad, double w_max) {
    if (samples < 2) throw domain_error("profile needs at least two samples");
    if (!(w_max > 0.0) || w_max > 1.0) throw domain_error("w_max must lie in (0, 1]");
    const bool inward = spec.direction == HoleDirection::inward;
    const Reduced r = reduce(spec, quad);
    auto f = [&](double s) { return std::exp(exponent(r, inward, s)); };

    std::vector<ProfileRow> rows(samples);
    double acc = 0.0, comp = 0.0;
    double prev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double w = w_max * static_cast<double>(i) / (samples - 1);
        ProfileRow& row = rows[i];
        row.w = w;
        row.unscaled = w * r.unit;
        row.divergent = w > r.cap;
        const double upto = std::min(w, r.cap);
        if (upto > prev) {
            const double piece = integrate(f, prev, upto, quad).value;
            const double y = piece - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
            prev = upto;
        }
        row.scaled = r.unit * acc;
    }
    return rows;
}

} // namespace thetascale

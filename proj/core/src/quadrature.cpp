#include "thetascale/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace thetascale {

namespace {

double eval_checked(const std::function<double(double)>& f, double s) {
    const double v = f(s);
    if (!std::isfinite(v))
        throw domain_error("integrand is not finite at s = " + std::to_string(s));
    return v;
}

struct Panel {
    double a, b;
    double fa, fm, fb;
    double s; // Simpson estimate over [a, b]
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

} // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg) {
    IntegrationResult out;
    if (a == b) return out;

    double sign = 1.0;
    double lo = a, hi = b;
    if (hi < lo) {
        std::swap(lo, hi);
        sign = -1.0;
    }
    const double full_width = hi - lo;

    // Kahan-compensated accumulation of accepted panels, left to right.
    double sum = 0.0, comp = 0.0;
    auto accumulate = [&](double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    // A diverging integrand reports the largest finite partial accumulated
    // before the blow-up.
    auto checked = [&](double s) {
        try {
            return eval_checked(f, s);
        } catch (divergence_error& e) {
            if (std::isnan(e.partial)) e.partial = sign * sum;
            throw;
        }
    };

    const double flo = checked(lo);
    const double fhi = checked(hi);
    const double fmid = checked(0.5 * (lo + hi));

    std::vector<Panel> stack;
    stack.push_back({lo, hi, flo, fmid, fhi, simpson(lo, hi, flo, fmid, fhi)});

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();

        const double m = 0.5 * (p.a + p.b);
        const double ml = 0.5 * (p.a + m);
        const double mr = 0.5 * (m + p.b);
        const double fml = checked(ml);
        const double fmr = checked(mr);
        const double sl = simpson(p.a, m, p.fa, fml, p.fm);
        const double sr = simpson(m, p.b, p.fm, fmr, p.fb);
        const double s2 = sl + sr;
        const double diff = s2 - p.s;
        const double w = p.b - p.a;
        const double allow =
            15.0 * std::max(cfg.abs_tol * w / full_width, cfg.rel_tol * std::fabs(s2));

        const bool width_floor = w <= full_width * 1e-14;
        if (std::fabs(diff) <= allow || width_floor) {
            accumulate(s2 + diff / 15.0);
            out.error_estimate += std::fabs(diff) / 15.0;
            continue;
        }

        if (++out.subdivisions > cfg.max_subdivisions)
            throw convergence_error("quadrature exceeded " +
                                    std::to_string(cfg.max_subdivisions) + " subdivisions");
        // Right pushed first so the left half is processed next.
        stack.push_back({m, p.b, p.fm, fmr, p.fb, sr});
        stack.push_back({p.a, m, p.fa, fml, p.fm, sl});
    }

    out.value = sign * sum;
    return out;
}

} // namespace thetascale

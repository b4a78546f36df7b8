#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "thetascale/curves.hpp"
#include "thetascale/theta_field.hpp"

namespace thetascale {

// L = m|v|^2/2 - V(x). Only the free and fixed-potential kinds are supported;
// gradV must be the exact gradient of V.
struct Lagrangian {
    double m = 1.0;
    bool has_potential = false;
    std::function<double(const Vec&)> V;
    std::function<Vec(const Vec&)> gradV;

    double value(const Vec& x, const Vec& v) const {
        return 0.5 * m * v.norm2() - (has_potential ? V(x) : 0.0);
    }

    static Lagrangian free(double m);
    static Lagrangian with_potential(double m, std::function<double(const Vec&)> V,
                                     std::function<Vec(const Vec&)> gradV);
    static Lagrangian harmonic(double m, double k);
};

struct Trajectory {
    std::vector<double> t;
    std::vector<Vec> x;
    std::vector<Vec> v;
};

// S = integral of exp(theta(gamma) - theta(ref)) * L dt along a curve whose
// t component is strictly increasing in s.
double scaled_action(const Curve& path, const Lagrangian& L, const ThetaField& theta,
                     const Point& ref, const QuadratureConfig& quad = {});

// Acceleration solved from the scaled equation of motion:
//   a_j = (A_j L - dV/dx_j)/m - v_j (dtheta/dt + A.v)
Vec eom_acceleration(const Lagrangian& L, const ThetaField& theta, double t, const Vec& x,
                     const Vec& v);

// Classic fixed-step 4th-order Runge-Kutta integration of the scaled
// equations of motion.
Trajectory integrate_eom(const Lagrangian& L, const ThetaField& theta, const Vec& x0,
                         const Vec& v0, double t0, double t_end, double dt);

// D_j f = d_j f + (d_j theta) f with the caller-supplied exact derivative.
double covariant_derivative(const std::function<double(const Point&)>& f,
                            const std::function<double(const Point&)>& df_j,
                            const ThetaField& theta, const Point& at, int axis);

// Function sampled on a 1-D grid along one coordinate axis.
struct SampledFn {
    std::vector<double> grid;
    std::vector<double> values;
};

// Same derivative from samples: central differences, interior points only.
double covariant_derivative(const SampledFn& f, const ThetaField& theta, const Point& base,
                            int axis, std::size_t index);

// p~ psi = i hbar (psi' + theta' psi) on a uniform grid (central differences,
// one-sided second-order stencils at the edges).
std::vector<std::complex<double>> momentum_apply(const std::vector<std::complex<double>>& psi,
                                                 const std::vector<double>& grid,
                                                 const ThetaField& theta, const Point& base,
                                                 double hbar = 1.0, int axis = 0);

// Kinetic operator -hbar^2 D^2 / 2m as a composition of two covariant
// derivative applications.
std::vector<std::complex<double>> kinetic_apply(const std::vector<std::complex<double>>& psi,
                                                const std::vector<double>& grid,
                                                const ThetaField& theta, const Point& base,
                                                double hbar, double m, int axis = 0);

} // namespace thetascale

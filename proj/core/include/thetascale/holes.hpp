#pragma once

#include <vector>

#include "thetascale/quadrature.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

enum class HoleDirection { inward, outward };

// Radial field K/r around `center`. `z` is the reference point at distance
// l = |z - center|. Inward profiles run from z toward the center; outward
// ones run from z away from the center to z' at distance lprime, placed at
// |center - z'| = 2|K| by default.
struct HoleSpec {
    double K = 1.0;
    Point center;
    Point z;
    HoleDirection direction = HoleDirection::inward;
    double lprime = -1.0; // < 0: use the default 2|K| - l

    double l() const;
    double lprime_or_default() const;

    // Convenience: center at the origin, z on the first axis at distance l.
    static HoleSpec axial(double K, double l, HoleDirection dir, double lprime = -1.0);
};

struct ProfileRow {
    double w = 0.0;
    double unscaled = 0.0;
    double scaled = 0.0;
    bool divergent = false;
};

struct HoleValue {
    double value = 0.0;
    bool divergent = false;
};

// Scaled radial distance covered at fraction w of the way. For black holes
// (K > 0, inward) the integral is clipped where the integrand reaches the
// exponent guard or the configured singularity clip, whichever comes first;
// past the clip the row is flagged divergent and carries the largest finite
// partial value.
HoleValue hole_scaled_distance(const HoleSpec& spec, double w, const QuadratureConfig& quad = {});

// Uniform-w profile over [0, w_max] with cumulative quadrature reuse.
std::vector<ProfileRow> hole_profile(const HoleSpec& spec, int samples,
                                     const QuadratureConfig& quad = {}, double w_max = 1.0);

} // namespace thetascale

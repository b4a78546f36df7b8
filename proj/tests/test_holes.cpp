#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetascale/curves.hpp"
#include "thetascale/dynamics.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/holes.hpp"
#include "thetascale/theta_field.hpp"

using namespace thetascale;

namespace {

Point pt(double t, double x, double y = 0.0, double z = 0.0) {
    return {t, Vec(x, y, z)};
}

} // namespace

TEST_CASE("no travel, no distance") {
    auto v = hole_scaled_distance(HoleSpec::axial(1.0, 1.0, HoleDirection::inward), 0.0);
    CHECK(v.value == 0.0);
    CHECK_FALSE(v.divergent);
}

TEST_CASE("infall toward a positive center stretches") {
    auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    auto v = hole_scaled_distance(spec, 0.8);
    CHECK_FALSE(v.divergent);
    CHECK(v.value == doctest::Approx(oracle::frozen::black_w08).epsilon(1e-8));
    CHECK(std::fabs(v.value - 4.1667) / 4.1667 <= 1e-4);
}

TEST_CASE("the positive center is unreachable") {
    auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    auto near = hole_scaled_distance(spec, 0.998);
    CHECK_FALSE(near.divergent);
    CHECK(near.value > 100.0);
    auto full = hole_scaled_distance(spec, 1.0);
    CHECK(full.divergent);
    CHECK(std::isfinite(full.value));
    CHECK(full.value > 1e290);
}

TEST_CASE("infall toward a negative center hits a barrier") {
    auto spec = HoleSpec::axial(-1.0, 1.0, HoleDirection::inward);
    const double limit = std::exp(1.0) * (std::exp(-1.0) - oracle::e1(1.0));
    CHECK(limit == doctest::Approx(oracle::frozen::white_w0999).epsilon(1e-12));

    auto near = hole_scaled_distance(spec, 0.999);
    CHECK_FALSE(near.divergent);
    CHECK(near.value == doctest::Approx(oracle::frozen::white_w0999).epsilon(1e-8));
    CHECK(near.value > 0.403);

    auto full = hole_scaled_distance(spec, 1.0);
    CHECK_FALSE(full.divergent);
    CHECK(full.value == doctest::Approx(limit).epsilon(1e-6));

    auto rows = hole_profile(spec, 101);
    for (const auto& r : rows) CHECK(r.scaled < 0.404);
}

TEST_CASE("outbound travel from a positive center shortens") {
    auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::outward);
    CHECK(spec.lprime_or_default() == doctest::Approx(1.0));
    auto v = hole_scaled_distance(spec, 1.0);
    CHECK_FALSE(v.divergent);
    CHECK(v.value == doctest::Approx(oracle::frozen::outward_w1).epsilon(1e-8));
    auto rows = hole_profile(spec, 51);
    for (const auto& r : rows)
        if (r.w > 0.0) CHECK(r.scaled < r.unscaled);
}

TEST_CASE("profiles are cumulative and monotone") {
    auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    auto rows = hole_profile(spec, 201);
    REQUIRE(rows.size() == 201);
    CHECK(rows.front().w == 0.0);
    CHECK(rows.front().scaled == 0.0);
    CHECK(rows.back().w == 1.0);
    CHECK(rows.back().divergent);

    bool seen_divergent = false;
    double prev = -1.0;
    for (const auto& r : rows) {
        if (seen_divergent) CHECK(r.divergent);
        seen_divergent = seen_divergent || r.divergent;
        if (!r.divergent) {
            CHECK(r.scaled > prev);
            prev = r.scaled;
            CHECK(r.unscaled == doctest::Approx(r.w).epsilon(1e-12));
        }
    }
    CHECK(seen_divergent);
}

TEST_CASE("profile rows match the one-shot evaluation") {
    auto spec = HoleSpec::axial(0.6, 2.0, HoleDirection::inward);
    auto rows = hole_profile(spec, 21, {}, 0.9);
    CHECK(rows.back().w == doctest::Approx(0.9));
    for (const auto& r : rows) {
        auto v = hole_scaled_distance(spec, r.w);
        CHECK(r.scaled == doctest::Approx(v.value).epsilon(1e-9));
    }
}

TEST_CASE("the profile is a scaled curve length in disguise") {
    const double K = 0.7, l = 1.5;
    auto th = ThetaField::radial(K, Vec(0, 0, 0));
    auto m = Metric::euclidean(3);
    Point z = pt(0, l, 0, 0);

    auto in = HoleSpec::axial(K, l, HoleDirection::inward);
    for (double w : {0.25, 0.5, 0.75}) {
        auto seg = Curve::segment(z, pt(0, l * (1.0 - w), 0, 0));
        auto direct = curve_length_scaled(seg, m, th, z);
        auto v = hole_scaled_distance(in, w);
        CHECK(std::fabs(v.value - direct.value) / direct.value <= 1e-8);
    }

    auto out = HoleSpec::axial(K, l, HoleDirection::outward, 2.0);
    for (double w : {0.3, 0.6, 1.0}) {
        auto seg = Curve::segment(z, pt(0, l + w * 2.0, 0, 0));
        auto direct = curve_length_scaled(seg, m, th, z);
        auto v = hole_scaled_distance(out, w);
        CHECK(std::fabs(v.value - direct.value) / direct.value <= 1e-8);
    }
}

TEST_CASE("the field force points at the center") {
    const double K = 1.0, l = 0.5, eps = 1e-3;
    auto th = ThetaField::radial(K, Vec(0, 0, 0));
    auto L = Lagrangian::free(1.0);
    Point at = pt(0, l, 0, 0);

    // force term alone: A L / m aims inward for K > 0
    Vec A = th.gradient(at);
    CHECK(A[0] < 0.0);
    CHECK(A[0] * L.value(at.x, Vec(eps, 0.0, 0.0)) < 0.0);

    // a tangential pass is pulled toward the center
    Vec a_tan = eom_acceleration(L, th, 0.0, at.x, Vec(0.0, eps, 0.0));
    CHECK(a_tan[0] < 0.0);

    // pure radial infall is braked so hard the net push is outward
    Vec a_rad = eom_acceleration(L, th, 0.0, at.x, Vec(-eps, 0.0, 0.0));
    CHECK(a_rad[0] > 0.0);
    CHECK(a_rad[0] == doctest::Approx(0.5 * K * eps * eps / (l * l)).epsilon(1e-12));
}

TEST_CASE("hole argument validation") {
    CHECK_THROWS_AS(hole_scaled_distance(HoleSpec::axial(0.0, 1.0, HoleDirection::inward), 0.5),
                    domain_error);
    CHECK_THROWS_AS(HoleSpec::axial(1.0, 0.0, HoleDirection::inward).l(), domain_error);
    CHECK_THROWS_AS(hole_scaled_distance(HoleSpec::axial(-0.4, 0.8, HoleDirection::outward), 0.5),
                    domain_error);
    auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    CHECK_THROWS_AS(hole_scaled_distance(spec, -0.1), domain_error);
    CHECK_THROWS_AS(hole_scaled_distance(spec, 1.1), domain_error);
    CHECK_THROWS_AS(hole_profile(spec, 1), domain_error);
    CHECK_THROWS_AS(hole_profile(spec, 10, {}, 1.5), domain_error);
}

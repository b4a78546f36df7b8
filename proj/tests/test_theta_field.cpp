#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetascale/curves.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/theta_field.hpp"

using namespace thetascale;

namespace {

Point pt(double t, double x, double y = 0.0, double z = 0.0) {
    Vec v(3);
    v.c = {x, y, z};
    return {t, v};
}

} // namespace

TEST_CASE("field values and gradients match finite differences") {
    auto linear = ThetaField::linear(Vec(1.0, -2.0, 0.5), 0.7);
    auto radial = ThetaField::radial(1.3, Vec(0.0, 0.0, 0.0));
    auto tq = ThetaField::time_quadratic(0.4, 1.0);
    oracle::Uniform u(0xc0ffeeull);
    for (const ThetaField* f : {&linear, &radial, &tq}) {
        for (int i = 0; i < 50; ++i) {
            Point p = pt(u.range(-2, 2), u.range(0.5, 2), u.range(0.5, 2), u.range(0.5, 2));
            for (int j = 0; j < 3; ++j) {
                auto along = [&](double s) {
                    Point q = p;
                    q.x.c[j] = s;
                    return f->value(q);
                };
                CHECK(f->gradient(p).c[j] ==
                      doctest::Approx(oracle::fd_derivative(along, p.x.c[j])).epsilon(1e-6));
            }
            auto in_time = [&](double s) { return f->value({s, p.x}); };
            CHECK(f->time_derivative(p) ==
                  doctest::Approx(oracle::fd_derivative(in_time, p.t)).epsilon(1e-6));
        }
    }
}

TEST_CASE("constant field scales nothing") {
    auto f = ThetaField::constant(5.0);
    CHECK(scaling_factor(f, pt(1, 1, 2, 3), pt(0, 0, 0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("linear field factor is the exponential of the gap") {
    auto f = ThetaField::linear(Vec(1.0, 0.0, 0.0));
    CHECK(scaling_factor(f, pt(0, 2, 0, 0), pt(0, 0, 0, 0)) ==
          doctest::Approx(std::exp(2.0)).epsilon(1e-12));
}

TEST_CASE("constant shift leaves every factor unchanged") {
    oracle::Uniform u(42);
    auto base = ThetaField::linear(Vec(0.3, -0.7, 0.1), 0.0);
    for (int i = 0; i < 100; ++i) {
        const double c = u.range(-50, 50);
        auto shifted = ThetaField::linear(Vec(0.3, -0.7, 0.1), c);
        Point a = pt(0, u.range(-3, 3), u.range(-3, 3), u.range(-3, 3));
        Point b = pt(0, u.range(-3, 3), u.range(-3, 3), u.range(-3, 3));
        // exponent cancellation leaves |c| * 2^-52 of drift, nothing more
        CHECK(scaling_factor(base, b, a) ==
              doctest::Approx(scaling_factor(shifted, b, a)).epsilon(5e-14));
    }
}

TEST_CASE("cocycle and inverse identities") {
    auto f = ThetaField::radial(0.8, Vec(0.0, 0.0, 0.0));
    oracle::Uniform u(0xabcdef);
    for (int i = 0; i < 2000; ++i) {
        Point x = pt(0, u.range(0.5, 4), u.range(0.5, 4), u.range(0.5, 4));
        Point y = pt(0, u.range(0.5, 4), u.range(0.5, 4), u.range(0.5, 4));
        Point z = pt(0, u.range(0.5, 4), u.range(0.5, 4), u.range(0.5, 4));
        const double rzx = scaling_factor(f, z, x);
        const double rzy = scaling_factor(f, z, y);
        const double ryx = scaling_factor(f, y, x);
        CHECK(rzx == doctest::Approx(rzy * ryx).epsilon(1e-12));
        CHECK(scaling_factor(f, x, y) * ryx == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gradient fields give path-independent path factors") {
    auto f = ThetaField::linear(Vec(0.4, -0.2, 0.0));
    auto field = VectorField::gradient_of(f);
    Point a = pt(0, 0, 0, 0), b = pt(0, 1, 1, 0);
    auto straight = Curve::segment(a, b);
    auto bent = Curve::polyline({a, pt(0, 1.3, -0.4, 0.2), pt(0, 0.1, 0.8, -0.1), b});
    const double expect = scaling_factor(f, b, a);
    CHECK(path_scaling_factor(field, straight) == doctest::Approx(expect).epsilon(1e-10));
    CHECK(path_scaling_factor(field, bent) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("zero field gives unit path factor") {
    auto curve = Curve::segment(pt(0, 0, 0, 0), pt(0, 2, 1, 0));
    CHECK(path_scaling_factor(VectorField::zero(3), curve) == doctest::Approx(1.0));
}

TEST_CASE("rotational field is path dependent") {
    auto field = VectorField::custom(
        [](const Point& p) {
            return Vec(-p.x.c[1], p.x.c[0], 0.0);
        },
        3);
    Point a = pt(0, 0, 0, 0), b = pt(0, 1, 1, 0);
    auto straight = Curve::segment(a, b);
    auto detour = Curve::polyline({a, pt(0, 1, 0, 0), b});
    const double fs = path_scaling_factor(field, straight);
    const double fd = path_scaling_factor(field, detour);
    CHECK(fs == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fd == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
    CHECK(std::abs(fs - fd) > 1e-6);
}

TEST_CASE("tabulated fields interpolate and extrapolate linearly") {
    auto f = ThetaField::tabulated({0.0, 1.0, 2.0, 4.0}, {0.0, 1.0, 1.5, 2.0});
    CHECK(f.value(pt(0, 1.0)) == doctest::Approx(1.0));
    CHECK(f.value(pt(0, 0.5)) == doctest::Approx(0.5));
    CHECK(f.value(pt(0, 3.0)) == doctest::Approx(1.75));
    CHECK(f.value(pt(0, 5.0)) == doctest::Approx(2.25));  // edge-cell slope carried outward
    CHECK(f.value(pt(0, -1.0)) == doctest::Approx(-1.0));
    // central difference with the cell spacing as step: (f(1.5) - f(-0.5)) / 2
    CHECK(f.gradient(pt(0, 0.5)).c[0] == doctest::Approx(0.875));
    CHECK(f.gradient(pt(0, 3.0)).c[0] == doctest::Approx((2.25 - 1.0) / 4.0));
}

TEST_CASE("tabulated grids must be strictly increasing") {
    CHECK_THROWS_AS(ThetaField::tabulated({0.0, 0.0, 1.0}, {0.0, 1.0, 2.0}), parse_error);
    CHECK_THROWS_AS(ThetaField::tabulated({1.0}, {1.0}), parse_error);
}

TEST_CASE("radial field guards its singular center") {
    auto f = ThetaField::radial(1.0, Vec(0.0, 0.0, 0.0));
    CHECK_THROWS_AS(f.value(pt(0, 0, 0, 0)), domain_error);
    CHECK_THROWS_AS(f.value(pt(0, 1e-9, 0, 0)), divergence_error);
    CHECK_THROWS_AS(ThetaField::radial(0.0, Vec(0.0, 0.0, 0.0)), domain_error);
}

TEST_CASE("factor overflow raises divergence") {
    auto f = ThetaField::linear(Vec(1000.0, 0.0, 0.0, 1));
    Vec a(1), b(1);
    b.c[0] = 1.0;
    CHECK_THROWS_AS(scaling_factor(f, Point{0, b}, Point{0, a}), divergence_error);
}

TEST_CASE("retarded time") {
    CHECK(retarded_time(pt(10, 0, 0, 0), Vec(3.0, 0.0, 0.0), 1.0) == doctest::Approx(7.0));
    CHECK(retarded_time(pt(4, 1, 2, 3), Vec(1.0, 2.0, 3.0), 1.0) == doctest::Approx(4.0));
    CHECK(retarded_time(pt(10, 0, 0, 0), Vec(0.0, 3.0, 0.0), 2.0) == doctest::Approx(8.5));
}

TEST_CASE("lightcone scaling uses the retarded time") {
    auto f = ThetaField::time_linear(0.1, 5.0);
    Point obs = pt(5, 0, 0, 0);
    CHECK(lightcone_scaling(f, obs, Vec(10.0, 0.0, 0.0), 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(lightcone_scaling(ThetaField::constant(3.0), obs, Vec(10.0, 0.0, 0.0)) ==
          doctest::Approx(1.0));
    // equal distances, equal factors
    CHECK(lightcone_scaling(f, obs, Vec(0.0, 10.0, 0.0)) ==
          doctest::Approx(lightcone_scaling(f, obs, Vec(10.0, 0.0, 0.0))));
    auto spatial = ThetaField::linear(Vec(1.0, 0.0, 0.0));
    CHECK_THROWS_AS(lightcone_scaling(spatial, obs, Vec(10.0, 0.0, 0.0)), domain_error);
}

TEST_CASE("time-quadratic field grows with its argument") {
    auto f = ThetaField::time_quadratic(0.5, 1.0);
    CHECK(f.value(pt(1.0, 0)) == doctest::Approx(0.0));
    CHECK(f.value(pt(3.0, 0)) == doctest::Approx(0.5 * (9.0 - 1.0) / 2.0));
    CHECK(f.time_derivative(pt(3.0, 0)) == doctest::Approx(1.5));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/quadrature.hpp"

using namespace thetascale;

TEST_CASE("polynomials integrate to machine precision") {
    auto r = integrate([](double x) { return x * x * x * x * x; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(r.subdivisions >= 1);
}

TEST_CASE("smooth transcendental integrands match the reference integrator") {
    auto exp_r = integrate([](double x) { return std::exp(x); }, 0.0, 3.0);
    CHECK(exp_r.value == doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-12));

    auto osc = integrate([](double x) { return std::sin(10.0 * x) * std::exp(-x); }, 0.0, 5.0);
    double ref = oracle::integrate(
        [](double x) { return std::sin(10.0 * x) * std::exp(-x); }, 0.0, 5.0, 128);
    CHECK(osc.value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("sqrt endpoint behaves within tolerance") {
    auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("reversed bounds flip the sign") {
    auto fwd = integrate([](double x) { return std::cos(x); }, 0.0, 1.0);
    auto rev = integrate([](double x) { return std::cos(x); }, 1.0, 0.0);
    CHECK(rev.value == doctest::Approx(-fwd.value).epsilon(1e-14));
}

TEST_CASE("error estimate bounds the true error on smooth integrands") {
    auto r = integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0);
    const double truth = std::atan(1.0);
    CHECK(std::abs(r.value - truth) <= std::max(r.error_estimate * 50.0, 1e-13));
}

TEST_CASE("subdivision cap raises a convergence error") {
    QuadratureConfig tight;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 1e-300;
    tight.max_subdivisions = 4;
    CHECK_THROWS_AS(
        integrate([](double x) { return std::sin(50.0 * x) / (1e-3 + x); }, 0.0, 1.0, tight),
        convergence_error);
}

TEST_CASE("non-finite integrand values raise a domain error") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
                    domain_error);
}

TEST_CASE("divergence from the integrand carries a finite partial value") {
    auto f = [](double x) {
        if (x > 0.9) throw divergence_error("field blows up");
        return 1.0;
    };
    try {
        integrate(f, 0.0, 1.0);
        FAIL("expected divergence_error");
    } catch (const divergence_error& e) {
        CHECK(std::isfinite(e.partial));
        CHECK(e.partial >= 0.0);
        CHECK(e.partial <= 1.0 + 1e-12);
    }
}

TEST_CASE("gauss8 panel rule is exact for low-degree polynomials") {
    double v = gauss8([](double x) { return x * x * x; }, -1.0, 2.0);
    CHECK(v == doctest::Approx((16.0 - 1.0) / 4.0).epsilon(1e-14));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/scaled_numbers.hpp"

using namespace thetascale;

TEST_CASE("representation round trip") {
    ScaledStructure st{3.0, "y"};
    ScaledValue v = from_represented(st, 2.5);
    CHECK(v.value == doctest::Approx(7.5));
    CHECK(represented(v) == doctest::Approx(2.5));
}

TEST_CASE("identity element is the scale itself") {
    ScaledStructure st{4.0, "y"};
    ScaledValue one = identity(st);
    CHECK(one.value == doctest::Approx(4.0));
    ScaledValue a = from_represented(st, 1.7);
    CHECK(scaled_mul(one, a).value == doctest::Approx(a.value));
    CHECK(scaled_div(a, one).value == doctest::Approx(a.value));
}

TEST_CASE("zero is invariant under scaling") {
    ScaledStructure st{123.456, "y"};
    CHECK(from_represented(st, 0.0).value == 0.0);
}

TEST_CASE("scaled operations represent the unscaled ones") {
    oracle::Uniform u(0x5ca1ab1eull);
    for (int i = 0; i < 1000; ++i) {
        ScaledStructure st{u.range(0.1, 10.0), "y"};
        const double a = u.range(-5.0, 5.0);
        const double b = u.range(0.5, 5.0);
        ScaledValue av = from_represented(st, a);
        ScaledValue bv = from_represented(st, b);
        CHECK(represented(scaled_add(av, bv)) == doctest::Approx(a + b).epsilon(1e-12));
        CHECK(represented(scaled_sub(av, bv)) == doctest::Approx(a - b).epsilon(1e-12));
        CHECK(represented(scaled_mul(av, bv)) == doctest::Approx(a * b).epsilon(1e-12));
        CHECK(represented(scaled_div(av, bv)) == doctest::Approx(a / b).epsilon(1e-12));
    }
}

TEST_CASE("analytic functions commute with scaling") {
    oracle::Uniform u(0xfeedbeefull);
    for (int i = 0; i < 1000; ++i) {
        ScaledStructure st{u.range(0.1, 10.0), "y"};
        const double a = u.range(-2.0, 2.0);
        ScaledValue av = from_represented(st, a);
        auto f = [](double x) { return x * x * x - 2.0 * x + 0.5; };
        ScaledValue fv = scaled_apply_analytic(f, av);
        CHECK(fv.value == doctest::Approx(st.scale * f(a)).epsilon(1e-10));
    }
}

TEST_CASE("zero sets of equations are preserved") {
    // p(x) = x^2 - 3x + 2 has roots 1 and 2; the scaled version of p applied
    // to the scaled root must be the scaled zero, i.e. raw 0.
    ScaledStructure st{2.5, "y"};
    auto p = [](double x) { return x * x - 3.0 * x + 2.0; };
    for (double root : {1.0, 2.0}) {
        ScaledValue r = from_represented(st, root);
        CHECK(scaled_apply_analytic(p, r).value == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("division by scaled zero is rejected") {
    ScaledStructure st{2.0, "y"};
    CHECK_THROWS_AS(scaled_div(from_represented(st, 1.0), from_represented(st, 0.0)),
                    domain_error);
}

TEST_CASE("mixing structures is rejected") {
    ScaledStructure a{2.0, "y"};
    ScaledStructure b{3.0, "z"};
    CHECK_THROWS_AS(scaled_add(from_represented(a, 1.0), from_represented(b, 1.0)),
                    structure_mismatch_error);
}

TEST_CASE("rescale moves a value between structures") {
    ScaledStructure a{2.0, "x"};
    ScaledStructure b{6.0, "y"};
    ScaledValue v = from_represented(a, 1.5); // raw 3.0
    ScaledValue w = rescale(v, b);
    CHECK(w.value == doctest::Approx(9.0));
    CHECK(represented(w) == doctest::Approx(1.5));
}

TEST_CASE("nonpositive scale is rejected") {
    CHECK_THROWS_AS(ScaledStructure(0.0, "y"), domain_error);
    CHECK_THROWS_AS(ScaledStructure(-1.0, "y"), domain_error);
}

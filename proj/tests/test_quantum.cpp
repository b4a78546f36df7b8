#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/quantum.hpp"
#include "thetascale/theta_field.hpp"

using namespace thetascale;

namespace {

Point pt(double t, double x, double y = 0.0, double z = 0.0) {
    return {t, Vec(x, y, z)};
}

// Amplitude whose squared modulus is the normal density N(mu, sigma^2).
double gauss_amp(double y, double mu, double sigma) {
    const double norm = std::pow(2.0 * 3.14159265358979312 * sigma * sigma, -0.25);
    return norm * std::exp(-(y - mu) * (y - mu) / (4.0 * sigma * sigma));
}

WavePacket sampled_gauss(double mu, double sigma, double k = 0.0, int n = 4096) {
    std::vector<double> grid(n);
    std::vector<std::complex<double>> amp(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = mu - 6.0 * sigma + 12.0 * sigma * i / (n - 1);
        amp[i] = gauss_amp(grid[i], mu, sigma) *
                 std::exp(std::complex<double>(0.0, k * grid[i]));
    }
    return WavePacket::sampled(std::move(grid), std::move(amp));
}

ThetaField plateau_field() {
    // flat inside the unit ball, quadratic growth outside
    return ThetaField::custom(
        [](const Point& p) {
            const double e = std::max(0.0, p.x.norm() - 1.0);
            return e * e;
        },
        [](const Point& p) {
            const double r = p.x.norm();
            if (r <= 1.0) return Vec(0.0, 0.0, 0.0);
            return p.x * (2.0 * (r - 1.0) / r);
        },
        [](const Point&) { return 0.0; }, 3);
}

} // namespace

TEST_CASE("flat field keeps the norm at one") {
    auto psi = WavePacket::gaussian(Vec(0.5, 0.0, 0.0, 1), Vec(0.3, 0.0, 0.0, 1));
    auto n = scaled_norm(psi, ThetaField::constant(2.0), pt(0, 0, 0, 0));
    CHECK(n.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("linear field tilts the norm by the moment factor") {
    auto psi = WavePacket::gaussian(Vec(1.0, 0.0, 0.0, 1), Vec(0.5, 0.0, 0.0, 1));
    auto th = ThetaField::linear(Vec(0.3, 0.0, 0.0));
    auto n = scaled_norm(psi, th, pt(0, 0, 0, 0));
    CHECK(n.value == doctest::Approx(oracle::frozen::mgf_norm).epsilon(1e-9));
    CHECK(n.value == doctest::Approx(std::exp(0.31125)).epsilon(1e-9));
}

TEST_CASE("a field flat across the support acts like no field") {
    auto psi = WavePacket::gaussian(Vec(0.0, 0.0, 0.0, 1), Vec(0.05, 0.0, 0.0, 1));
    auto n = scaled_norm(psi, plateau_field(), pt(0, 0.2, 0, 0));
    CHECK(n.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("flat-field position is the mean") {
    auto psi = WavePacket::gaussian(Vec(2.0, 0.0, 0.0, 1), Vec(0.7, 0.0, 0.0, 1));
    auto p = scaled_position(psi, ThetaField::constant(1.0), pt(0, 0, 0, 0));
    CHECK(p.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("an even field keeps a centered packet centered") {
    auto th = ThetaField::custom(
        [](const Point& p) { return p.x[0] * p.x[0]; },
        [](const Point& p) { return Vec(2.0 * p.x[0], 0.0, 0.0); },
        [](const Point&) { return 0.0; }, 3);
    auto psi = WavePacket::gaussian(Vec(0.0, 0.0, 0.0, 1), Vec(0.5, 0.0, 0.0, 1));
    auto p = scaled_position(psi, th, pt(0, 0, 0, 0));
    CHECK(std::fabs(p.value) <= 1e-9);
}

TEST_CASE("linear field shifts the weighted position") {
    auto psi = WavePacket::gaussian(Vec(1.0, 0.0, 0.0, 1), Vec(0.5, 0.0, 0.0, 1));
    auto th = ThetaField::linear(Vec(0.3, 0.0, 0.0));
    auto p = scaled_position(psi, th, pt(0, 0, 0, 0));
    CHECK(p.value == doctest::Approx(oracle::frozen::mgf_position).epsilon(1e-9));
    CHECK(p.value == doctest::Approx(std::exp(0.31125) * 1.075).epsilon(1e-9));
}

TEST_CASE("expectation ratios do not depend on the reference") {
    auto psi = WavePacket::gaussian(Vec(1.0, 0.0, 0.0, 1), Vec(0.5, 0.0, 0.0, 1));
    auto th = ThetaField::linear(Vec(0.3, 0.0, 0.0));
    Point refs[] = {pt(0, 0, 0, 0), pt(0, 2, 1, 0), pt(3, -1, 0, 5)};
    double first = 0.0;
    for (int i = 0; i < 3; ++i) {
        auto n = scaled_norm(psi, th, refs[i]);
        auto p = scaled_position(psi, th, refs[i]);
        const double ratio = p.value / n.value;
        if (i == 0)
            first = ratio;
        else
            CHECK(ratio == doctest::Approx(first).epsilon(1e-12));
    }
}

TEST_CASE("transferring an expectation equals recomputing it") {
    auto psi = WavePacket::gaussian(Vec(1.0, 0.0, 0.0, 1), Vec(0.5, 0.0, 0.0, 1));
    auto th = ThetaField::linear(Vec(0.3, 0.0, 0.0));
    Point x = pt(0, 0, 0, 0), y = pt(0, 4, 0, 0);
    auto moved = transfer_expectation(scaled_norm(psi, th, x), th, y);
    auto fresh = scaled_norm(psi, th, y);
    CHECK(moved.value == doctest::Approx(fresh.value).epsilon(1e-9));
    CHECK(moved.quantity == Quantity::norm);
}

TEST_CASE("transfer identities") {
    auto psi = WavePacket::gaussian(Vec(0.0, 0.0, 0.0, 1), Vec(0.4, 0.0, 0.0, 1));
    auto th = ThetaField::linear(Vec(0.2, 0.0, 0.0));
    auto e = scaled_norm(psi, th, pt(0, 1, 0, 0));
    auto same = transfer_expectation(e, th, e.ref);
    CHECK(same.value == doctest::Approx(e.value).epsilon(1e-15));
    auto back = transfer_expectation(transfer_expectation(e, th, pt(0, -2, 0, 0)), th, e.ref);
    CHECK(back.value == doctest::Approx(e.value).epsilon(1e-12));
    CHECK_THROWS_AS(transfer_expectation(e, ThetaField::radial(1.0, Vec(0, 0, 0)),
                                         pt(0, 2, 0, 0)),
                    structure_mismatch_error);
}

TEST_CASE("sampled packets reproduce the closed forms") {
    auto psi = sampled_gauss(1.0, 0.5);
    CHECK(psi.normalized);
    auto th = ThetaField::linear(Vec(0.3, 0.0, 0.0));
    auto n = scaled_norm(psi, th, pt(0, 0, 0, 0));
    auto p = scaled_position(psi, th, pt(0, 0, 0, 0));
    CHECK(n.value == doctest::Approx(oracle::frozen::mgf_norm).epsilon(1e-6));
    CHECK(p.value == doctest::Approx(oracle::frozen::mgf_position).epsilon(1e-6));
}

TEST_CASE("momentum needs samples") {
    auto psi = WavePacket::gaussian(Vec(0.0, 0.0, 0.0, 1), Vec(1.0, 0.0, 0.0, 1));
    CHECK_THROWS_AS(scaled_momentum(psi, ThetaField::constant(0.0), pt(0, 0, 0, 0)),
                    domain_error);
}

TEST_CASE("momentum of a boosted packet tracks the wavenumber") {
    const double k = 2.0;
    auto psi = sampled_gauss(0.0, 0.5, k);
    auto th = ThetaField::linear(Vec(0.1, 0.0, 0.0));
    auto mom = scaled_momentum(psi, th, pt(0, 0, 0, 0));
    auto n = scaled_norm(psi, th, pt(0, 0, 0, 0));
    CHECK(mom.value == doctest::Approx(-k * n.value).epsilon(1e-5));
}

TEST_CASE("separable two-dimensional packets multiply per axis") {
    auto psi = WavePacket::gaussian(Vec(1.0, -0.5, 0.0, 2), Vec(0.5, 0.4, 0.0, 2));
    auto th = ThetaField::linear(Vec(0.3, 0.2, 0.0), 0.1);
    auto n = scaled_norm(psi, th, pt(0, 0, 0, 0));
    CHECK(n.value == doctest::Approx(std::exp(0.31125) * std::exp(-0.0968)).epsilon(1e-9));
    auto p = scaled_position(psi, th, pt(0, 0, 0, 0), 1);
    CHECK(p.value / n.value == doctest::Approx(-0.5 + 0.2 * 0.16).epsilon(1e-9));
}

TEST_CASE("non-separable fields reject multi-axis gaussians") {
    auto psi = WavePacket::gaussian(Vec(2.0, 2.0, 0.0, 2), Vec(0.3, 0.3, 0.0, 2));
    auto th = ThetaField::radial(0.5, Vec(0, 0, 0));
    CHECK_THROWS_AS(scaled_norm(psi, th, pt(0, 1, 0, 0)), domain_error);
}

TEST_CASE("a field that outgrows the density diverges") {
    auto th = ThetaField::custom(
        [](const Point& p) { return std::pow(p.x[0], 4.0); },
        [](const Point& p) { return Vec(4.0 * std::pow(p.x[0], 3.0), 0.0, 0.0); },
        [](const Point&) { return 0.0; }, 3);
    auto psi = WavePacket::gaussian(Vec(0.0, 0.0, 0.0, 1), Vec(1.0, 0.0, 0.0, 1));
    CHECK_THROWS_AS(scaled_norm(psi, th, pt(0, 0, 0, 0)), divergence_error);
}

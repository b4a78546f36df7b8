// Microbenchmarks for the evaluation hot paths: pointwise factors, scaled
// quadrature, the radial-profile integrals, the geodesic solver, and the
// grid operators.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "thetascale/curves.hpp"
#include "thetascale/dynamics.hpp"
#include "thetascale/geodesics.hpp"
#include "thetascale/geometry.hpp"
#include "thetascale/holes.hpp"
#include "thetascale/quantum.hpp"
#include "thetascale/theta_field.hpp"

using namespace thetascale;

namespace {

Point pt(double t, double x, double y = 0.0, double z = 0.0) { return {t, Vec(x, y, z)}; }

void bm_scaling_factor_linear(benchmark::State& state) {
    const auto th = ThetaField::linear(Vec(0.3, -0.2, 0.1), 0.25);
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-6;
        benchmark::DoNotOptimize(scaling_factor(th, pt(0, 1 + x, 2, -1), pt(0, 0)));
    }
}
BENCHMARK(bm_scaling_factor_linear);

void bm_scaling_factor_radial(benchmark::State& state) {
    const auto th = ThetaField::radial(1.0, Vec(0, 0, 0));
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-6;
        benchmark::DoNotOptimize(scaling_factor(th, pt(0, 1 + x, 0, 0), pt(0, 2)));
    }
}
BENCHMARK(bm_scaling_factor_radial);

void bm_scaled_line_element(benchmark::State& state) {
    const auto th = ThetaField::linear(Vec(0.3, -0.2, 0.1));
    const auto mk = Metric::minkowski(3);
    const std::vector<double> disp = {1.0, 0.5, -0.25, 0.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(scaled_line_element(mk, th, pt(0, 1, 2, -1), disp, pt(0, 0)));
}
BENCHMARK(bm_scaled_line_element);

void bm_curve_length_segment(benchmark::State& state) {
    const auto th = ThetaField::linear(Vec(0.3, -0.2, 0.1));
    const auto eu = Metric::euclidean(3);
    const auto seg = Curve::segment(pt(0, 0), pt(0, 2, 1, -1));
    for (auto _ : state)
        benchmark::DoNotOptimize(curve_length_scaled(seg, eu, th, pt(0, 0)).value);
}
BENCHMARK(bm_curve_length_segment);

void bm_curve_length_polyline(benchmark::State& state) {
    const auto th = ThetaField::radial(0.8, Vec(0, 0, 0));
    const auto eu = Metric::euclidean(3);
    const int n = static_cast<int>(state.range(0));
    std::vector<Point> pts;
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        pts.push_back(pt(0, 1 + s, 0.3 * std::sin(3.14159265358979323846 * s), 0));
    }
    const auto poly = Curve::polyline(pts);
    for (auto _ : state)
        benchmark::DoNotOptimize(curve_length_scaled(poly, eu, th, pt(0, 1)).value);
}
BENCHMARK(bm_curve_length_polyline)->Arg(16)->Arg(64)->Arg(256);

void bm_hole_black_w08(benchmark::State& state) {
    const auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    for (auto _ : state) benchmark::DoNotOptimize(hole_scaled_distance(spec, 0.8).value);
}
BENCHMARK(bm_hole_black_w08);

void bm_hole_profile(benchmark::State& state) {
    const auto spec = HoleSpec::axial(1.0, 1.0, HoleDirection::inward);
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hole_profile(spec, samples).size());
}
BENCHMARK(bm_hole_profile)->Arg(101)->Arg(1001);

void bm_geodesic_radial(benchmark::State& state) {
    const auto th = ThetaField::radial(1.0, Vec(0, 0, 0));
    const auto eu = Metric::euclidean(3);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(geodesic(pt(0, 1), pt(0, 0.2), th, eu, n).length.value);
}
BENCHMARK(bm_geodesic_radial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void bm_el_residual(benchmark::State& state) {
    const auto th = ThetaField::radial(1.0, Vec(0, 0, 0));
    const int n = 64;
    std::vector<Point> pts;
    for (int i = 0; i <= n; ++i)
        pts.push_back(pt(0, 1.0 - 0.8 * static_cast<double>(i) / n, 0, 0));
    const auto poly = Curve::polyline(pts);
    std::vector<double> grid(pts.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = static_cast<double>(i) / (static_cast<double>(grid.size()) - 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(el_residual(poly, th, grid));
}
BENCHMARK(bm_el_residual);

void bm_integrate_eom(benchmark::State& state) {
    const auto th = ThetaField::linear(Vec(1, 0, 0));
    const auto L = Lagrangian::free(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate_eom(L, th, Vec(0, 0, 0), Vec(2, 0, 0), 0.0, 1.0, 1e-3).x.back()[0]);
}
BENCHMARK(bm_integrate_eom);

void bm_scaled_norm_gaussian(benchmark::State& state) {
    const auto psi = WavePacket::gaussian(Vec(1, 0, 0, 1), Vec(0.5, 0, 0, 1));
    const auto th = ThetaField::linear(Vec(0.3, 0, 0));
    for (auto _ : state) benchmark::DoNotOptimize(scaled_norm(psi, th, pt(0, 0)).value);
}
BENCHMARK(bm_scaled_norm_gaussian);

void bm_momentum_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> grid(n);
    std::vector<std::complex<double>> psi(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = -6.0 + 12.0 * i / (n - 1);
        psi[i] = std::exp(std::complex<double>(0.0, 3.0 * grid[i])) *
                 std::exp(-grid[i] * grid[i] / 4.0);
    }
    const auto th = ThetaField::linear(Vec(0.3, 0, 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(momentum_apply(psi, grid, th, pt(0, 0)).size());
}
BENCHMARK(bm_momentum_apply)->Arg(1024)->Arg(4096);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "cone_spectra/cross_section_operator.hpp"
#include "cone_spectra/point_interaction.hpp"
#include "cone_spectra/radial_counting.hpp"
#include "cone_spectra/sphere_curves.hpp"

namespace cs = cone_spectra;

namespace {

const cs::SphericalLoop& loop() {
  static const auto l = cs::SphericalLoop::fourier(std::numbers::pi / 3, {{0.05, 0.02}, {0.0, 0.03}, {0.01, 0.0}});
  return l;
}

void curvature_profile(benchmark::State& state) {
  const cs::CurveGeometry geom(loop());
  for (auto _ : state) benchmark::DoNotOptimize(geom.curvature_profile(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(curvature_profile)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void spectrum(benchmark::State& state) {
  const cs::CurveGeometry geom(loop());
  const auto coarse = geom.curvature_profile(static_cast<std::size_t>(state.range(0)));
  const auto fine = geom.curvature_profile(2 * static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cs::eigenvalues(coarse, fine));
}
BENCHMARK(spectrum)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void count_below(benchmark::State& state) {
  const cs::HalfLineOperatorSpec spec{1.0, cs::BoundaryCondition::Dirichlet, -2.0, 0.5};
  const double E = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cs::count_below(spec, E));
}
BENCHMARK(count_below)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);

void count_below_matrix(benchmark::State& state) {
  const cs::HalfLineOperatorSpec spec{1.0, cs::BoundaryCondition::Dirichlet, -2.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(cs::count_below_matrix_auto(spec, 1e-8));
}
BENCHMARK(count_below_matrix)->Unit(benchmark::kMillisecond);

void transcendental(benchmark::State& state) {
  const cs::IntervalDeltaSpec spec{10.0, cs::BoundaryCondition::Neumann};
  for (auto _ : state) benchmark::DoNotOptimize(cs::solve_transcendental(spec));
}
BENCHMARK(transcendental)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

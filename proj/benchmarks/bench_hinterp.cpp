#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hinterp/normalization.hpp"
#include "hinterp/quadrature.hpp"
#include "hinterp/sobolev1d.hpp"
#include "hinterp/spectral.hpp"
#include "hinterp/weighted_l2.hpp"

namespace {

void BM_IntegrateFinite(benchmark::State& state) {
  hinterp::Integrand f([](double x) { return std::sin(40.0 * x) * std::exp(-x); });
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::integrate_finite(f, 0.0, 10.0).value);
}
BENCHMARK(BM_IntegrateFinite);

void BM_NormalizationQuadrature(benchmark::State& state) {
  const hinterp::ThetaQ p(0.3, hinterp::Exponent::finite(1.5));
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::n_theta_q_by_quadrature(p));
}
BENCHMARK(BM_NormalizationQuadrature);

hinterp::WeightedSpacePair make_space(std::size_t n) {
  std::vector<hinterp::Atom> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1);
    atoms.push_back({0.5 + 0.1 * x, std::pow(10.0, std::sin(x)), std::pow(10.0, std::cos(x))});
  }
  return hinterp::WeightedSpacePair(std::move(atoms));
}

void BM_KNormClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = make_space(n);
  const hinterp::Element phi(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::k_norm(space, phi, 0.4));
}
BENCHMARK(BM_KNormClosedForm)->Arg(4)->Arg(64);

void BM_KNormQuadrature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = make_space(n);
  const hinterp::Element phi(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::k_norm_by_quadrature(space, phi, 0.4));
}
BENCHMARK(BM_KNormQuadrature)->Arg(4)->Arg(64);

void BM_SineHsNorm(benchmark::State& state) {
  const auto f = hinterp::sine_fourier_sq(1);
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::hs_norm_fourier(f, 0.5));
}
BENCHMARK(BM_SineHsNorm)->Unit(benchmark::kMillisecond);

void BM_SpectralNorm(benchmark::State& state) {
  const auto dec = hinterp::dirichlet_interval_decomposition(8);
  const hinterp::CoefficientVector coef(
      [](std::size_t j) { return 1.0 / std::pow(static_cast<double>(j), 2.0); }, {1.0, 2.0});
  for (auto _ : state) benchmark::DoNotOptimize(hinterp::spectral_interp_norm(dec, coef, 0.5));
}
BENCHMARK(BM_SpectralNorm);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hinterp/counterexamples.hpp"
#include "hinterp/normalization.hpp"
#include "hinterp_tools/report.hpp"

namespace hinterp::tools {

enum class Format { csv, json };

/// Parsed flags. Commands read only the fields they document.
struct RunConfig {
  std::vector<double> theta;
  std::vector<Exponent> q;
  std::vector<double> a;
  double p = 2.0;
  std::size_t jmax = 2;
  std::size_t grid = 99;
  double h_min = 1e-3;
  double h_max = 1e-1;
  std::size_t h_points = 9;
  std::size_t nmax = 20;
  AlphaMode alpha_mode = AlphaMode::norm_squared;
  std::optional<double> tol;
  std::uint64_t seed = 20240611;
  std::size_t cases = 100;
  Format format = Format::csv;
  std::string out = "-";
  double normalization_scale = 1.0;
};

/// theta,q,N,N_prime,ratio over the theta x q grid (defaults 0.1..0.9 and
/// q in {1, 2, 4, inf}). Asserts N' <= N <= sqrt(2) N'.
Report cmd_constants(const RunConfig& cfg);

/// Spectral and Fourier norms of phi_j = sqrt(2) sin(j pi x), j = 1..jmax,
/// at theta = k / (grid + 1). Asserts ratio >= 1 - 1e-6.
Report cmd_figure1(const RunConfig& cfg);

/// Norms of the constant function on (0, a). Asserts the ratio bound is
/// below min(a^{1/4}, 1). Default a grid: 10^-4 .. 10^2, 13 points.
Report cmd_interval_ratio(const RunConfig& cfg);

/// Cusp norm table on a log grid of h, plus fitted slopes. Asserts the L2
/// norm stays below its volume bound.
Report cmd_cusp(const RunConfig& cfg);

/// Fractal sequence and bounds for n = 2..nmax, the witness Phi(3 a_n / 4) = n
/// and the psi energies where representable. Asserts a_n <= 4^{-n},
/// a_n < a_{n-1}/4, the witness, and interp_half_bound <= sqrt(2)^{-n} for
/// n >= 3.
Report cmd_fractal(const RunConfig& cfg);

/// One summary row per property suite.
struct SuiteResult {
  std::string suite;
  std::size_t cases;
  std::size_t failures;
  double max_deviation;
};

/// Seeded property suites on random 3-atom weighted pairs: k_eq_j,
/// exponent_theta, reiteration, duality, symmetry.
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, std::size_t cases,
                                       double normalization_scale = 1.0);

Report cmd_selfcheck(const RunConfig& cfg);

}  // namespace hinterp::tools

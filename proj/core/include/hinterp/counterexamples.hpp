#pragma once

#include <cstddef>
#include <vector>

#include "hinterp/cutoff.hpp"
#include "hinterp/quadrature.hpp"

namespace hinterp {

/// Norms of the constant function 1 on (0, a) and the resulting bound on the
/// ratio of the interpolation norm to the Sobolev norm at theta = 1/2.
struct IntervalRatio {
  double a;
  double l2;
  double h1;
  double h2;
  double upper_bound;
  double ratio_bound;
  bool below_min;  // ratio_bound < min(a^{1/4}, 1)
};

IntervalRatio interval_ratio_bound(double a);

// ---------------------------------------------------------------------------
// Cusp domain {0 < x1 < 1, |x2| < x1^p}

struct CuspParams {
  double p = 2.0;
  CutoffProfile chi = default_cutoff();
  std::vector<double> h_grid;
};

/// n points log-spaced from hi down to lo, both included.
std::vector<double> log_grid_decreasing(double lo, double hi, std::size_t n);

/// The tensor-product Sobolev norm squared
/// sum_{|alpha| <= m} C(m, |alpha|) (|alpha|! / (alpha1! alpha2!)) fx[alpha1] fy[alpha2],
/// where fx[k], fy[k] are the squared L2 norms of the k-th derivative factors.
double tensor_sobolev_norm_sq(int m, const std::vector<double>& fx,
                              const std::vector<double>& fy);

struct CuspRow {
  double h;
  double l2_norm;
  double l2_upper;  // sqrt(2 h^{p+1} / (p + 1))
  double h2_plus_norm;
  double interp_bound;
};

struct CuspScalings {
  double p;
  double theta;
  std::vector<CuspRow> rows;
  double slope_l2;
  double slope_h2;
  double slope_interp;
  double expected_l2;
  double expected_h2;
  double expected_interp;
};

CuspScalings cusp_norm_scalings(const CuspParams& cp, double theta,
                                const QuadratureOptions& opts = {.rel_tol = 1e-12});

/// ||d^k/dx^k chi(x / L)||^2 on R by direct quadrature in x.
double scaled_cutoff_energy(const CutoffProfile& chi, int k, double scale,
                            const QuadratureOptions& opts = {.rel_tol = 1e-13});

/// Largest relative deviation between scaled_cutoff_energy and the scaling
/// law L^{1-2k} E_k over k = 0, 1, 2 and L in {h, 2h}.
double cusp_factor_scaling_deviation(const CutoffProfile& chi, double h,
                                     const QuadratureOptions& opts = {.rel_tol = 1e-13});

/// Ordinary least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// One-dimensional fractal union of intervals (a_n / 2, a_n)

enum class AlphaMode { norm, norm_squared };

/// ||chi||_{H^2(R)} and its square, E0 + 2 E1 + E2.
struct FractalAlpha {
  double norm;
  double norm_squared;
  double select(AlphaMode mode) const { return mode == AlphaMode::norm ? norm : norm_squared; }
};

FractalAlpha fractal_alpha(const CutoffProfile& chi,
                           const QuadratureOptions& opts = {.rel_tol = 1e-13});

/// a_1 = 1, a_n = (a_{n-1} / 4) (1 + (1 + 64 a_{n-1}^{-3}) alpha)^{-1}.
/// The recurrence is carried in log space, so every index up to nmax is
/// representable; `underflow_index` is the first n with a_n == 0 in double
/// precision (0 if none). Indices are 1-based; entry 0 is unused.
struct FractalSequence {
  double alpha;
  std::size_t nmax;
  std::vector<double> log_a;
  std::vector<double> log_b;  // b_1 = 1, b_n = a_{n-1} / 2 - a_n
  std::size_t underflow_index;

  double a(std::size_t n) const;
  double b(std::size_t n) const;
};

FractalSequence fractal_sequence(double alpha, std::size_t nmax);

/// Bounds for phi_n = chi on the n-th interval, in natural logarithms.
struct FractalBounds {
  std::size_t n;
  double log_l2_bound;           // (1/2) log a_n
  double log_h2_bound;           // (1/2) log((1 + (1 + 64 a_{n-1}^{-3}) alpha) / 2)
  double log_interp_half_bound;  // log(2^{-1/4} a_n^{1/4} (1 + (1 + 64 a_{n-1}^{-3}) alpha)^{1/4})
  double log_geometric_bound;    // log(2^{-1/4} 4^{-n/4})
  double log_sqrt2_bound;        // -n log(sqrt 2)
  bool a_le_4pow;                // a_n <= 4^{-n}
  bool interp_le_sqrt2;          // interp_half_bound <= (sqrt 2)^{-n}
  double tail_sum_bound;         // sum_{k >= n} (sqrt 2)^{-k}
};

FractalBounds fractal_phi_bounds(const FractalSequence& seq, std::size_t n);

/// The H^2 energy of psi_n (chi on t < 0, 1 on (0, a_n), chi((t - a_n)/b_n)
/// beyond), in closed form and by direct quadrature, and the bound
/// (1 + (1 + b_n^{-3}) alpha) / 2 with alpha = ||chi||^2_{H^2}.
struct PsiEnergy {
  double closed_form;
  double quadrature;
  double bound;
};

/// Whether psi_n can be integrated in double precision: a_n must be nonzero
/// and the density, which scales like b_n^{-4}, must stay finite.
bool psi_energy_representable(const FractalSequence& seq, std::size_t n);

/// Throws NumericError when !psi_energy_representable(seq, n).
PsiEnergy fractal_psi_energy(const FractalSequence& seq, std::size_t n, const CutoffProfile& chi,
                             const QuadratureOptions& opts = {.rel_tol = 1e-12});

/// Phi(t) = sum_n phi_n(t) at t = 3 a_N / 4, inside (a_N / 2, a_N), where
/// phi_n = 1 on (0, a_n). Sums over every computed index.
struct FractalWitness {
  std::size_t n;
  double log_t;
  std::size_t phi_value;
};

FractalWitness fractal_witness(const FractalSequence& seq, std::size_t n);

}  // namespace hinterp

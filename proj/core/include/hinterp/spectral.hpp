#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hinterp/quadrature.hpp"
#include "hinterp/weighted_l2.hpp"

namespace hinterp {

/// Bound lambda_j^{-1} <= constant * j^exponent, used for series tails.
struct EigenvalueGrowth {
  double constant;
  double exponent;
};

/// Eigenvalues lambda_1 >= lambda_2 >= ... > 0 of the compact operator of a
/// densely and compactly embedded pair, eigenvectors normalized in H_0.
/// Indices are 1-based. Values beyond the stored prefix come from an optional
/// extension rule.
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::vector<double> lambdas,
                        std::function<double(std::size_t)> extension = {},
                        std::optional<EigenvalueGrowth> growth = std::nullopt);

  double lambda(std::size_t j) const;
  double rho(std::size_t j) const { return 1.0 / lambda(j) - 1.0; }
  std::size_t stored() const { return lambdas_.size(); }
  bool extendable() const { return static_cast<bool>(extension_); }
  const std::optional<EigenvalueGrowth>& growth() const { return growth_; }

 private:
  std::vector<double> lambdas_;
  std::function<double(std::size_t)> extension_;
  std::optional<EigenvalueGrowth> growth_;
};

/// (L^2(0,1), H^1_0(0,1)): phi_j = sqrt(2) sin(j pi x), rho_j = j^2 pi^2,
/// lambda_j = 1 / (1 + j^2 pi^2). Extends lazily past jmax.
SpectralDecomposition dirichlet_interval_decomposition(std::size_t jmax);

/// |a_j| <= constant * j^{-power} for every j.
struct CoefficientDecay {
  double constant;
  double power;
};

/// Coefficients a_j = (phi, phi_j)_{H_0}, 1-based: either a finite list
/// (zero beyond it) or a generator with a decay bound.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<double> values);
  CoefficientVector(std::function<double(std::size_t)> generator, CoefficientDecay decay);

  /// The j-th unit coefficient vector e_j.
  static CoefficientVector unit(std::size_t j);

  double operator[](std::size_t j) const;
  bool finite() const { return !generator_; }
  std::size_t support() const { return values_.size(); }
  const std::optional<CoefficientDecay>& decay() const { return decay_; }

 private:
  std::vector<double> values_;
  std::function<double(std::size_t)> generator_;
  std::optional<CoefficientDecay> decay_;
};

/// (sum_j lambda_j^{-s} |a_j|^2)^{1/2} for s in [0, 1]; s = 0 and s = 1 give
/// the H_0 and H_1 norms. Throws std::invalid_argument outside [0, 1] and
/// NumericError when the coefficient tail cannot be bounded.
double spectral_interp_norm(const SpectralDecomposition& dec, const CoefficientVector& coef,
                            double s, const SeriesOptions& opts = {.rel_tol = 1e-14});

/// a_j = int_0^1 f(x) sqrt(2) sin(j pi x) dx for j = 1..jmax, with a Parseval
/// check against int_0^1 f^2.
CoefficientVector sine_coefficients(const std::function<double(double)>& f, std::size_t jmax,
                                    const QuadratureOptions& opts = {.rel_tol = 1e-12});

/// The counting-measure pair with w0 = 1, w1 = 1/lambda_j over j = 1..n.
WeightedSpacePair as_weighted_pair(const SpectralDecomposition& dec, std::size_t n);

}  // namespace hinterp

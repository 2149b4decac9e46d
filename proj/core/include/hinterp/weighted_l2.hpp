#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hinterp/quadrature.hpp"

namespace hinterp {

/// One atom of a finite measure space with its two positive weights.
struct Atom {
  double mu;
  double w0;
  double w1;
};

/// The pair (L^2(w0 mu), L^2(w1 mu)) over a finite atomic measure space.
class WeightedSpacePair {
 public:
  explicit WeightedSpacePair(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  /// w_theta = w0^{1-theta} w1^theta for theta in [0, 1].
  double weight(std::size_t i, double theta) const;
  /// The pair (w_{theta0}, w_{theta1}) built from this one.
  WeightedSpacePair reiterated(double theta0, double theta1) const;
  /// The pair of duals (1/w0, 1/w1) with respect to the L^2(mu) pairing.
  WeightedSpacePair dual() const;
  /// Same atoms with w0 and w1 exchanged.
  WeightedSpacePair swapped() const;

 private:
  std::vector<Atom> atoms_;
};

template <class T>
concept FieldScalar = std::same_as<T, double> || std::same_as<T, std::complex<double>>;

using Element = std::vector<double>;
using ComplexElement = std::vector<std::complex<double>>;

enum class Endpoint : int { zero = 0, one = 1 };

/// Options for the definitional (quadrature) routes. `normalization_scale`
/// multiplies N_{theta,2} wherever it appears as a norm prefactor; it exists
/// only so tests can corrupt the normalization and watch K = J fail.
struct InterpolationOptions {
  QuadratureOptions quadrature{.rel_tol = 1e-12};
  double normalization_scale = 1.0;
};

namespace detail {
inline double abs2(double x) { return x * x; }
inline double abs2(const std::complex<double>& z) { return std::norm(z); }
void require_shape(const WeightedSpacePair& space, std::size_t n);
void require_t(double t);
void require_theta_open(double theta);
}  // namespace detail

/// ||phi||_{H_j} = (sum_i w_ji mu_i |phi_i|^2)^{1/2}.
template <FieldScalar S>
double norm_j(const WeightedSpacePair& space, std::span<const S> phi, Endpoint j) {
  detail::require_shape(space, phi.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Atom& a = space[i];
    acc.add((j == Endpoint::zero ? a.w0 : a.w1) * a.mu * detail::abs2(phi[i]));
  }
  return std::sqrt(acc.value());
}

/// Exact K-functional: the infimum over splits phi = phi0 + phi1 of
/// (||phi0||_0^2 + t^2 ||phi1||_1^2)^{1/2}, evaluated atomwise.
template <FieldScalar S>
double k_functional(const WeightedSpacePair& space, std::span<const S> phi, double t) {
  detail::require_shape(space, phi.size());
  detail::require_t(t);
  const double t2 = t * t;
  CompensatedSum acc;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Atom& a = space[i];
    acc.add(a.mu * (a.w0 * a.w1 * t2 / (a.w0 + t2 * a.w1)) * detail::abs2(phi[i]));
  }
  return std::sqrt(acc.value());
}

/// The split attaining the K-functional: phi1 = w0 phi / (w0 + t^2 w1).
template <FieldScalar S>
std::pair<std::vector<S>, std::vector<S>> optimal_split(const WeightedSpacePair& space,
                                                        std::span<const S> phi, double t) {
  detail::require_shape(space, phi.size());
  detail::require_t(t);
  std::vector<S> phi0(phi.size());
  std::vector<S> phi1(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Atom& a = space[i];
    phi1[i] = phi[i] * (a.w0 / (a.w0 + t * t * a.w1));
    phi0[i] = phi[i] - phi1[i];
  }
  return {std::move(phi0), std::move(phi1)};
}

/// K-norm for q = 2, closed form: (sum mu w0^{1-theta} w1^theta |phi|^2)^{1/2}.
template <FieldScalar S>
double k_norm(const WeightedSpacePair& space, std::span<const S> phi, double theta) {
  detail::require_shape(space, phi.size());
  detail::require_theta_open(theta);
  CompensatedSum acc;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    acc.add(space[i].mu * space.weight(i, theta) * detail::abs2(phi[i]));
  }
  return std::sqrt(acc.value());
}

template <FieldScalar S>
double norm_j(const WeightedSpacePair& space, const std::vector<S>& phi, Endpoint j) {
  return norm_j(space, std::span<const S>(phi), j);
}
template <FieldScalar S>
double k_functional(const WeightedSpacePair& space, const std::vector<S>& phi, double t) {
  return k_functional(space, std::span<const S>(phi), t);
}
template <FieldScalar S>
auto optimal_split(const WeightedSpacePair& space, const std::vector<S>& phi, double t) {
  return optimal_split(space, std::span<const S>(phi), t);
}
template <FieldScalar S>
double k_norm(const WeightedSpacePair& space, const std::vector<S>& phi, double theta) {
  return k_norm(space, std::span<const S>(phi), theta);
}

/// Real-valued entry points for the quadrature routes; complex elements enter
/// through their moduli since every quantity depends only on |phi_i|.
template <FieldScalar S>
Element moduli(std::span<const S> phi) {
  Element out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = std::sqrt(detail::abs2(phi[i]));
  return out;
}

/// K-norm by its definition: N_{theta,2} (int_0^inf t^{-1-2theta} K(t)^2 dt)^{1/2}.
double k_norm_by_quadrature(const WeightedSpacePair& space, std::span<const double> phi,
                            double theta, const InterpolationOptions& opts = {});

struct JNormResult {
  double value;
  /// Largest atomwise relative deviation of int_0^inf f(t)/t dt from phi.
  double reconstruction_deviation;
};

/// J-norm evaluated at the optimal density
/// f(t) = w_theta N^2 t^{2theta} phi / (w0 + w1 t^2). Throws std::logic_error
/// when f fails to reconstruct phi to 1e-8.
JNormResult j_norm_via_optimal_density(const WeightedSpacePair& space,
                                       std::span<const double> phi, double theta,
                                       const InterpolationOptions& opts = {});

/// max(||phi||_0, ||phi||_1).
double delta_norm(const WeightedSpacePair& space, std::span<const double> phi);
/// The quadratic Sigma-norm K(1, phi).
double sigma_norm_quadratic(const WeightedSpacePair& space, std::span<const double> phi);

/// Dense couple operator, row-major, rows = target atoms.
class CoupleOperator {
 public:
  CoupleOperator(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static CoupleOperator identity(std::size_t n);
  static CoupleOperator diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 100'000;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// ||A|| from L^2(source_weight) to L^2(target_weight) (weights include mu):
/// the largest singular value of diag(sqrt(tw)) A diag(1/sqrt(sw)), by power
/// iteration on its normal matrix.
double operator_norm_weighted(const CoupleOperator& a, std::span<const double> source_weight,
                              std::span<const double> target_weight,
                              const PowerIterationOptions& opts = {});

struct OperatorBoundReport {
  double m0;
  double m1;
  double m_theta;
  double bound;  // m0^{1-theta} m1^theta
  bool holds;
};

/// Checks ||A||_theta <= ||A||_0^{1-theta} ||A||_1^theta (+1e-9).
OperatorBoundReport interpolated_operator_bound_check(const CoupleOperator& a,
                                                      const WeightedSpacePair& source,
                                                      const WeightedSpacePair& target,
                                                      double theta);

struct CheckReport {
  bool passed;
  double max_deviation;
};

/// Interpolating (w_{theta0}, w_{theta1}) with eta reproduces w_theta,
/// theta = (1-eta) theta0 + eta theta1: atomwise and in the norms of the
/// supplied elements. Tolerance 1e-10 relative.
CheckReport reiteration_check(const WeightedSpacePair& space, double theta0, double theta1,
                              double eta, std::span<const Element> elements);

/// The dual of the theta-space under the L^2(mu) pairing equals the
/// theta-interpolant of the dual pair: checks the weight identity atomwise and
/// the dual norm of each psi at its Cauchy-Schwarz maximizer.
CheckReport duality_check(const WeightedSpacePair& space, double theta,
                          std::span<const Element> psis);

/// sup over ||phi||_theta = 1 of |sum mu phi psi|, attained at
/// phi = psi / w_theta (normalized). Returns the pairing at that maximizer.
double dual_norm_at_maximizer(const WeightedSpacePair& space, std::span<const double> psi,
                              double theta);

}  // namespace hinterp

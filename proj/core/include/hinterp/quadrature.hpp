#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace hinterp {

/// A real integrand together with the structural hints the adaptive engine
/// needs.
///
/// Panels are always split at `breakpoints` and `singular_points`. Any
/// abscissa closer than `window` to a singular point is routed to `fallback`
/// (a series expansion supplied by the caller) instead of `evaluator`, so a
/// 0/0 form is never evaluated directly. `decay` is the power beta with
/// |f(t)| = O(t^-beta) as t -> infinity; semi-infinite integration requires
/// beta > 1.
struct Integrand {
  std::function<double(double)> evaluator;
  std::vector<double> singular_points;
  std::function<double(double)> fallback;
  double window = 1e-4;
  std::vector<double> breakpoints;
  double decay = 2.0;

  Integrand() = default;

  template <class F>
    requires std::invocable<F&, double> &&
             (!std::same_as<std::remove_cvref_t<F>, Integrand>)
  Integrand(F f, double decay_hint = 2.0)  // NOLINT(google-explicit-constructor)
      : evaluator(std::move(f)), decay(decay_hint) {}

  /// Evaluates at x, dispatching to the fallback near singular points.
  double operator()(double x) const;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of local Kronrod-Gauss differences
  std::size_t evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
///
/// Converges when the summed error estimate is below
/// max(abs_tol, rel_tol * |I|), or when it reaches the roundoff floor
/// relative to the integral of |f|. Panels are refined worst-first with ties
/// broken by position, so results are bit-reproducible.
/// Throws NumericError when the evaluation budget is exhausted.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

/// Integral over [a, inf), a > 0, via t = a/u mapped onto (0, 1].
QuadratureResult integrate_tail(const Integrand& f, double a,
                                const QuadratureOptions& opts = {});

/// Integral over (0, inf): split at 1, the upper half mapped by t -> 1/t.
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureOptions& opts = {});

/// Integral over the whole real line as two semi-infinite pieces.
QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureOptions& opts = {});

/// A series sum_{n >= first_index} term(n) with a rigorous remainder bound:
/// tail_bound(n) bounds |sum_{k > n} term(k)|.
struct SeriesTerms {
  std::function<double(std::size_t)> term;
  std::function<double(std::size_t)> tail_bound;
};

struct SeriesOptions {
  double rel_tol = 1e-12;
  std::size_t max_terms = 10'000'000;
  std::size_t first_index = 1;
};

struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/// Compensated partial sums until tail_bound(n) <= rel_tol * |partial sum|.
SeriesResult sum_series(const SeriesTerms& s, const SeriesOptions& opts = {});

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace hinterp

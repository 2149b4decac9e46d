#pragma once

#include <functional>
#include <vector>

#include "hinterp/quadrature.hpp"

namespace hinterp {

/// Value and rigorous error bound of a tail integral.
struct TailEstimate {
  double value;
  double error;
};

/// xi -> |phi^(xi)|^2 for a function on the real line, with the hints that
/// hs_norm_fourier needs.
///
/// `decay` is the power with |phi^|^2 = O(xi^-decay). If `tail` is set, the
/// integral is split at `cutoff`: [0, cutoff] is integrated adaptively on
/// panels of `panel_width`, and `tail(s)` supplies int_cutoff^inf
/// (1 + xi^2)^s |phi^|^2. Otherwise the half line is integrated directly.
struct FourierSquareModulus {
  std::function<double(double)> evaluator;
  std::vector<double> singular_points;
  std::function<double(double)> fallback;
  double decay = 2.0;
  bool even = true;

  double cutoff = 0.0;
  double panel_width = 0.0;
  std::function<TailEstimate(double s, const QuadratureOptions&)> tail;
};

/// ||phi||_{H^s(R)} = (int (1 + xi^2)^s |phi^(xi)|^2 dxi)^{1/2}.
/// Throws std::invalid_argument when decay <= 2s + 1.
double hs_norm_fourier(const FourierSquareModulus& f, double s,
                       const QuadratureOptions& opts = {.rel_tol = 1e-12});

/// |phi^_j|^2 for phi_j = sqrt(2) sin(j pi x) on (0, 1), zero outside:
/// 4 j^2 pi cos^2(xi/2) / (j^2 pi^2 - xi^2)^2 for odd j, sin^2 for even j.
/// The removable singularity at xi = j pi is evaluated by a series within
/// 1e-4. Admits s in [0, 3/2).
FourierSquareModulus sine_fourier_sq(int j);

/// Boundary values and interior integrals of phi on (0, a):
/// i0 = int |phi|^2, i1 = int |phi'|^2, i2 = int |phi''|^2.
struct IntervalTrace {
  double a;
  double v0;
  double va;
  double d0;
  double da;
  double i0;
  double i1;
  double i2;
};

/// ||phi||_{H^1(0,a)} through the minimal extension (closed form).
double h1_norm_interval(const IntervalTrace& tr);
/// ||phi||_{H^2(0,a)} through the minimal extension (closed form):
/// |v0|^2 + |d0|^2 + |v0 - d0|^2 + |va|^2 + |da|^2 + |va + da|^2 + i0 + 2 i1 + i2.
double h2_norm_interval(const IntervalTrace& tr);

/// A function on (0, a) with its first two derivatives, all closed form.
struct IntervalFunction {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/// Builds a trace by evaluating the endpoints and integrating over (0, a).
IntervalTrace trace_from_function(const IntervalFunction& fn, double a,
                                  const QuadratureOptions& opts = {.rel_tol = 1e-13});

/// The H^order(R)-minimal extension E_order phi of a function on (0, a).
/// Order 1 decays as e^{-|x|}; order 2 uses (1 - x) e^x and x e^x on the left
/// (and their mirror images on the right) to match value and slope.
class ExtensionProfile {
 public:
  ExtensionProfile(IntervalFunction fn, double a, int order);

  double value(double x) const;
  double first(double x) const;
  /// Second derivative; only meaningful for order 2.
  double second(double x) const;

  int order() const { return order_; }
  double length() const { return a_; }

 private:
  IntervalFunction fn_;
  double a_;
  int order_;
  double v0_, va_, d0_, da_;
};

ExtensionProfile minimal_extension(const IntervalFunction& fn, double a, int order);

/// ||E phi||_{H^order(R)} by direct quadrature of
/// int |E|^2 + |E'|^2 (order 1) or int |E|^2 + 2|E'|^2 + |E''|^2 (order 2).
double extension_energy_norm(const ExtensionProfile& e,
                             const QuadratureOptions& opts = {.rel_tol = 1e-13});

/// n0^{1-theta} n1^theta.
double interp_upper_bound(double n0, double n1, double theta);

}  // namespace hinterp

#include "hinterp/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace hinterp {

namespace {

// exp(-1/y) underflows to zero long before y reaches 1e-3.
constexpr double kFlat = 1e-3;

struct Jet {
  double v, d1, d2;
};

Jet exp_inverse(double y) {
  if (y <= kFlat) return {0.0, 0.0, 0.0};
  const double f = std::exp(-1.0 / y);
  const double iy = 1.0 / y;
  return {f, f * iy * iy, f * (iy * iy * iy * iy - 2.0 * iy * iy * iy)};
}

// S(x) and its first two derivatives for x in (0, 1).
Jet smooth_step(double x) {
  const Jet u = exp_inverse(x);
  const Jet w = exp_inverse(1.0 - x);
  const double d = u.v + w.v;
  const double d1 = u.d1 - w.d1;
  const double d2 = u.d2 + w.d2;
  const double s = u.v / d;
  const double s1 = u.d1 / d - u.v * d1 / (d * d);
  const double s2 = u.d2 / d - 2.0 * u.d1 * d1 / (d * d) - u.v * d2 / (d * d) +
                    2.0 * u.v * d1 * d1 / (d * d * d);
  return {s, s1, s2};
}

Jet bump_jet(double t) {
  const double r = std::abs(t);
  if (r <= 0.5) return {1.0, 0.0, 0.0};
  if (r >= 1.0) return {0.0, 0.0, 0.0};
  const Jet s = smooth_step(2.0 - 2.0 * r);
  const double sign = t < 0.0 ? -1.0 : 1.0;
  return {s.v, -2.0 * sign * s.d1, 4.0 * s.d2};
}

}  // namespace

CutoffProfile default_cutoff() {
  return {[](double t) { return bump_jet(t).v; }, [](double t) { return bump_jet(t).d1; },
          [](double t) { return bump_jet(t).d2; }};
}

double cutoff_energy(const CutoffProfile& chi, int k, const QuadratureOptions& opts) {
  if (k < 0 || k > 2) throw std::invalid_argument("cutoff energy order must be 0, 1 or 2");
  const std::function<double(double)>& g = k == 0 ? chi.value : (k == 1 ? chi.first : chi.second);
  if (!g) throw std::invalid_argument("cutoff derivative not supplied");
  Integrand sq([&g](double t) {
    const double v = g(t);
    return v * v;
  });
  sq.breakpoints = {-0.75, -0.5, 0.0, 0.5, 0.75};
  return integrate_finite(sq, -1.0, 1.0, opts).value;
}

}  // namespace hinterp

#include "hinterp/sobolev1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hinterp {

namespace {

constexpr double kPi = std::numbers::pi;

void require_trace(const IntervalTrace& tr) {
  if (!(tr.a > 0.0)) throw std::invalid_argument("interval length must be positive");
  if (tr.i0 < 0.0 || tr.i1 < 0.0 || tr.i2 < 0.0) {
    throw std::invalid_argument("trace integrals must be nonnegative");
  }
}

double sinc(double y) {
  if (std::abs(y) < 1e-3) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
  }
  return std::sin(y) / y;
}

}  // namespace

double hs_norm_fourier(const FourierSquareModulus& f, double s, const QuadratureOptions& opts) {
  if (!f.evaluator) throw std::invalid_argument("Fourier modulus has no evaluator");
  if (!(f.decay > 2.0 * s + 1.0)) {
    std::ostringstream msg;
    msg << "insufficient decay " << f.decay << " for H^s norm with s = " << s;
    throw std::invalid_argument(msg.str());
  }
  auto weight = [s](double xi) { return std::pow(1.0 + xi * xi, s); };
  Integrand g([&f, weight](double xi) { return weight(xi) * f.evaluator(xi); },
              f.decay - 2.0 * s);
  g.singular_points = f.singular_points;
  if (f.fallback) {
    g.fallback = [&f, weight](double xi) { return weight(xi) * f.fallback(xi); };
  }

  double half_line = 0.0;
  if (f.tail) {
    if (!(f.cutoff > 0.0 && f.panel_width > 0.0)) {
      throw std::invalid_argument("tail model needs a positive cutoff and panel width");
    }
    for (double x = f.panel_width; x < f.cutoff; x += f.panel_width) g.breakpoints.push_back(x);
    QuadratureOptions body_opts = opts;
    body_opts.max_evaluations = std::max<std::size_t>(
        opts.max_evaluations, 64 * (g.breakpoints.size() + 1) * 15);
    const QuadratureResult body = integrate_finite(g, 0.0, f.cutoff, body_opts);
    const TailEstimate tail = f.tail(s, opts);
    half_line = body.value + tail.value;
  } else {
    half_line = integrate_semi_infinite(g, opts).value;
  }
  if (f.even) return std::sqrt(2.0 * half_line);

  Integrand mirrored = g;
  mirrored.evaluator = [&f, weight](double xi) { return weight(xi) * f.evaluator(-xi); };
  if (f.fallback) {
    mirrored.fallback = [&f, weight](double xi) { return weight(xi) * f.fallback(-xi); };
  }
  for (double& p : mirrored.singular_points) p = -p;
  mirrored.breakpoints.clear();
  return std::sqrt(half_line + integrate_semi_infinite(mirrored, opts).value);
}

FourierSquareModulus sine_fourier_sq(int j) {
  if (j < 1) throw std::invalid_argument("sine index j must be >= 1");
  const double jd = static_cast<double>(j);
  const double c = jd * kPi;
  const bool odd = (j % 2) == 1;

  FourierSquareModulus f;
  f.evaluator = [c, jd, odd](double xi) {
    const double trig = odd ? std::cos(0.5 * xi) : std::sin(0.5 * xi);
    const double den = c * c - xi * xi;
    return 4.0 * jd * jd * kPi * trig * trig / (den * den);
  };
  // Near xi = c both parities reduce to j^2 pi sinc^2(delta/2) / (2c + delta)^2.
  f.fallback = [c, jd](double xi) {
    const double delta = xi - c;
    const double sc = sinc(0.5 * delta);
    const double den = 2.0 * c + delta;
    return jd * jd * kPi * sc * sc / (den * den);
  };
  f.singular_points = {c};
  f.decay = 4.0;
  f.even = true;

  // Beyond a cutoff Xi = 2 pi K the integrand is h(xi) (1 +/- cos xi) with
  // h = 2 j^2 pi (1 + xi^2)^s / (xi^2 - c^2)^2. The mean part is integrated
  // on the mapped tail; for the oscillatory part, sin Xi = 0 and cos Xi = 1
  // give int_Xi^inf h cos = -h'(Xi) + R with |R| <= |h''(Xi)|.
  const double cutoff = 2.0 * kPi * (1000.0 + 10.0 * jd);
  f.cutoff = cutoff;
  f.panel_width = kPi;
  f.tail = [c, jd, odd, cutoff](double s, const QuadratureOptions& opts) -> TailEstimate {
    if (!(s >= 0.0 && s < 1.5)) {
      throw std::invalid_argument("sine family admits s in [0, 3/2) only");
    }
    const double c2 = c * c;
    auto h = [c2, jd, s](double xi) {
      const double den = xi * xi - c2;
      return 2.0 * jd * jd * kPi * std::pow(1.0 + xi * xi, s) / (den * den);
    };
    const Integrand mean(h, 4.0 - 2.0 * s);
    const QuadratureResult m = integrate_tail(mean, cutoff, opts);

    const double x = cutoff;
    const double x2 = x * x;
    const double log_slope = 2.0 * s * x / (1.0 + x2) - 4.0 * x / (x2 - c2);
    const double log_slope_d = 2.0 * s * (1.0 - x2) / ((1.0 + x2) * (1.0 + x2)) +
                               4.0 * (x2 + c2) / ((x2 - c2) * (x2 - c2));
    const double hx = h(x);
    const double h1 = hx * log_slope;
    const double h2 = hx * (log_slope * log_slope + log_slope_d);
    const double oscillatory = -h1;
    return {m.value + (odd ? oscillatory : -oscillatory), m.error + std::abs(h2)};
  };
  return f;
}

double h1_norm_interval(const IntervalTrace& tr) {
  require_trace(tr);
  return std::sqrt(tr.v0 * tr.v0 + tr.va * tr.va + tr.i0 + tr.i1);
}

double h2_norm_interval(const IntervalTrace& tr) {
  require_trace(tr);
  const double left = tr.v0 * tr.v0 + tr.d0 * tr.d0 + (tr.v0 - tr.d0) * (tr.v0 - tr.d0);
  // The right tail (1 + y) e^{-y} phi(a) + y e^{-y} phi'(a) mirrors the left one
  // with phi'(0) -> -phi'(a), hence the plus sign.
  const double right = tr.va * tr.va + tr.da * tr.da + (tr.va + tr.da) * (tr.va + tr.da);
  return std::sqrt(left + right + tr.i0 + 2.0 * tr.i1 + tr.i2);
}

IntervalTrace trace_from_function(const IntervalFunction& fn, double a,
                                  const QuadratureOptions& opts) {
  if (!(a > 0.0)) throw std::invalid_argument("interval length must be positive");
  if (!fn.value || !fn.first) throw std::invalid_argument("trace needs value and derivative");
  auto square = [](const std::function<double(double)>& g) {
    return [&g](double x) {
      const double v = g(x);
      return v * v;
    };
  };
  IntervalTrace tr{};
  tr.a = a;
  tr.v0 = fn.value(0.0);
  tr.va = fn.value(a);
  tr.d0 = fn.first(0.0);
  tr.da = fn.first(a);
  tr.i0 = integrate_finite(square(fn.value), 0.0, a, opts).value;
  tr.i1 = integrate_finite(square(fn.first), 0.0, a, opts).value;
  tr.i2 = fn.second ? integrate_finite(square(fn.second), 0.0, a, opts).value : 0.0;
  return tr;
}

ExtensionProfile::ExtensionProfile(IntervalFunction fn, double a, int order)
    : fn_(std::move(fn)), a_(a), order_(order) {
  if (!(a > 0.0)) throw std::invalid_argument("interval length must be positive");
  if (order != 1 && order != 2) throw std::invalid_argument("extension order must be 1 or 2");
  if (!fn_.value) throw std::invalid_argument("extension needs function values");
  if (!fn_.first) throw std::invalid_argument("extension needs first derivatives");
  if (order == 2 && !fn_.second) {
    throw std::invalid_argument("order-2 extension needs second derivatives");
  }
  v0_ = fn_.value(0.0);
  va_ = fn_.value(a_);
  d0_ = fn_.first(0.0);
  da_ = fn_.first(a_);
}

double ExtensionProfile::value(double x) const {
  if (x <= 0.0) {
    const double e = std::exp(x);
    return order_ == 1 ? v0_ * e : (x * d0_ + (1.0 - x) * v0_) * e;
  }
  if (x >= a_) {
    const double y = x - a_;
    const double e = std::exp(-y);
    return order_ == 1 ? va_ * e : (y * da_ + (1.0 + y) * va_) * e;
  }
  return fn_.value(x);
}

double ExtensionProfile::first(double x) const {
  if (x <= 0.0) {
    const double e = std::exp(x);
    return order_ == 1 ? v0_ * e : ((1.0 + x) * d0_ - x * v0_) * e;
  }
  if (x >= a_) {
    const double y = x - a_;
    const double e = std::exp(-y);
    return order_ == 1 ? -va_ * e : ((1.0 - y) * da_ - y * va_) * e;
  }
  return fn_.first(x);
}

double ExtensionProfile::second(double x) const {
  if (x <= 0.0) {
    const double e = std::exp(x);
    return order_ == 1 ? v0_ * e : ((2.0 + x) * d0_ - (1.0 + x) * v0_) * e;
  }
  if (x >= a_) {
    const double y = x - a_;
    const double e = std::exp(-y);
    return order_ == 1 ? va_ * e : ((y - 2.0) * da_ + (y - 1.0) * va_) * e;
  }
  return fn_.second ? fn_.second(x) : 0.0;
}

ExtensionProfile minimal_extension(const IntervalFunction& fn, double a, int order) {
  return ExtensionProfile(fn, a, order);
}

double extension_energy_norm(const ExtensionProfile& e, const QuadratureOptions& opts) {
  auto density = [&e](double x) {
    const double v = e.value(x);
    const double d = e.first(x);
    if (e.order() == 1) return v * v + d * d;
    const double dd = e.second(x);
    return v * v + 2.0 * d * d + dd * dd;
  };
  const double a = e.length();
  const Integrand left([&density](double t) { return density(-t); }, 8.0);
  const Integrand right([&density, a](double t) { return density(a + t); }, 8.0);
  const double interior = integrate_finite(density, 0.0, a, opts).value;
  const double outer = integrate_semi_infinite(left, opts).value +
                       integrate_semi_infinite(right, opts).value;
  return std::sqrt(interior + outer);
}

double interp_upper_bound(double n0, double n1, double theta) {
  if (n0 < 0.0 || n1 < 0.0) throw std::invalid_argument("norms must be nonnegative");
  if (n0 == 0.0 || n1 == 0.0) return 0.0;
  return std::pow(n0, 1.0 - theta) * std::pow(n1, theta);
}

}  // namespace hinterp

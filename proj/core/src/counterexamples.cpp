#include "hinterp/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hinterp/errors.hpp"
#include "hinterp/sobolev1d.hpp"

namespace hinterp {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log_sum_exp(double x, double y) {
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(std::min(x, y) - m));
}

// log(1 + (1 + 64 a^{-3}) alpha) given log a.
double log_recurrence_factor(double alpha, double log_a) {
  return log_sum_exp(std::log1p(alpha), std::log(64.0 * alpha) - 3.0 * log_a);
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntervalRatio interval_ratio_bound(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("interval length must be positive");
  const IntervalTrace one{a, 1.0, 1.0, 0.0, 0.0, a, 0.0, 0.0};
  IntervalRatio r{};
  r.a = a;
  r.l2 = std::sqrt(one.i0);
  r.h1 = h1_norm_interval(one);
  r.h2 = h2_norm_interval(one);
  r.upper_bound = std::sqrt(r.l2 * r.h2);
  const double a2 = a * a + 4.0 * a;
  r.ratio_bound = std::pow(a2 / (a2 + 4.0), 0.25);
  r.below_min = r.ratio_bound < std::min(std::pow(a, 0.25), 1.0);
  return r;
}

std::vector<double> log_grid_decreasing(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("grid needs 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> g(n);
  const double l0 = std::log(hi);
  const double l1 = std::log(lo);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = hi;
  g.back() = lo;
  return g;
}

double tensor_sobolev_norm_sq(int m, const std::vector<double>& fx, const std::vector<double>& fy) {
  if (m < 0) throw std::invalid_argument("Sobolev order must be nonnegative");
  const auto need = static_cast<std::size_t>(m) + 1;
  if (fx.size() < need || fy.size() < need) {
    throw std::invalid_argument("factor energies missing for the requested order");
  }
  CompensatedSum sum;
  for (int k = 0; k <= m; ++k) {
    for (int i = 0; i <= k; ++i) {
      sum.add(binomial(m, k) * binomial(k, i) * fx[static_cast<std::size_t>(i)] *
              fy[static_cast<std::size_t>(k - i)]);
    }
  }
  return sum.value();
}

double scaled_cutoff_energy(const CutoffProfile& chi, int k, double scale,
                            const QuadratureOptions& opts) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
  const std::function<double(double)>& g = k == 0 ? chi.value : (k == 1 ? chi.first : chi.second);
  const double factor = std::pow(scale, -k);
  Integrand sq([&g, factor, scale](double x) {
    const double v = factor * g(x / scale);
    return v * v;
  });
  sq.breakpoints = {-0.75 * scale, -0.5 * scale, 0.0, 0.5 * scale, 0.75 * scale};
  return integrate_finite(sq, -scale, scale, opts).value;
}

double cusp_factor_scaling_deviation(const CutoffProfile& chi, double h,
                                     const QuadratureOptions& opts) {
  double worst = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const double e = cutoff_energy(chi, k, opts);
    for (double scale : {h, 2.0 * h}) {
      const double predicted = std::pow(scale, 1.0 - 2.0 * k) * e;
      const double direct = scaled_cutoff_energy(chi, k, scale, opts);
      worst = std::max(worst, std::abs(direct - predicted) / predicted);
    }
  }
  return worst;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("slope fit needs matching sizes");
  if (x.size() < 3) throw std::invalid_argument("slope fit needs at least three points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive data");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate grid");
  return sxy / sxx;
}

CuspScalings cusp_norm_scalings(const CuspParams& cp, double theta, const QuadratureOptions& opts) {
  if (!(cp.p > 1.0)) throw std::invalid_argument("cusp exponent p must exceed 1");
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0, 1)");
  if (cp.h_grid.size() < 3) throw std::invalid_argument("degenerate grid: need at least 3 points");
  for (std::size_t i = 0; i < cp.h_grid.size(); ++i) {
    const double h = cp.h_grid[i];
    if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("grid values must lie in (0, 1]");
    if (i > 0 && !(h < cp.h_grid[i - 1])) throw std::invalid_argument("grid must be decreasing");
  }

  CuspScalings out{};
  out.p = cp.p;
  out.theta = theta;
  out.expected_l2 = 0.5 * (cp.p + 1.0);
  out.expected_h2 = -1.0;
  out.expected_interp = (1.0 - theta) * 0.5 * (cp.p + 1.0) - theta;

  const double p = cp.p;
  std::vector<double> hs, l2s, h2s, ibs;
  for (double h : cp.h_grid) {
    Integrand mass([&cp, h, p](double x) {
      const double c = cp.chi.value(x / h);
      return c * c * std::pow(x, p);
    });
    mass.breakpoints = {0.5 * h, 0.75 * h};
    const double l2 = std::sqrt(2.0 * integrate_finite(mass, 0.0, h, opts).value);

    std::vector<double> fx(3), fy(3);
    for (int k = 0; k <= 2; ++k) {
      fx[static_cast<std::size_t>(k)] = scaled_cutoff_energy(cp.chi, k, h, opts);
      fy[static_cast<std::size_t>(k)] = scaled_cutoff_energy(cp.chi, k, 2.0 * h, opts);
    }
    const double h2 = std::sqrt(tensor_sobolev_norm_sq(2, fx, fy));
    const double bound = interp_upper_bound(l2, h2, theta);
    out.rows.push_back({h, l2, std::sqrt(2.0 * std::pow(h, p + 1.0) / (p + 1.0)), h2, bound});
    hs.push_back(h);
    l2s.push_back(l2);
    h2s.push_back(h2);
    ibs.push_back(bound);
  }
  out.slope_l2 = loglog_slope(hs, l2s);
  out.slope_h2 = loglog_slope(hs, h2s);
  out.slope_interp = loglog_slope(hs, ibs);
  return out;
}

FractalAlpha fractal_alpha(const CutoffProfile& chi, const QuadratureOptions& opts) {
  const double sq = cutoff_energy(chi, 0, opts) + 2.0 * cutoff_energy(chi, 1, opts) +
                    cutoff_energy(chi, 2, opts);
  return {std::sqrt(sq), sq};
}

double FractalSequence::a(std::size_t n) const {
  if (n < 1 || n > nmax) throw std::out_of_range("fractal index out of range");
  return std::exp(log_a[n]);
}

double FractalSequence::b(std::size_t n) const {
  if (n < 1 || n > nmax) throw std::out_of_range("fractal index out of range");
  return std::exp(log_b[n]);
}

FractalSequence fractal_sequence(double alpha, std::size_t nmax) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
  if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
  FractalSequence seq{alpha, nmax, std::vector<double>(nmax + 1, 0.0),
                      std::vector<double>(nmax + 1, 0.0), 0};
  for (std::size_t n = 2; n <= nmax; ++n) {
    const double prev = seq.log_a[n - 1];
    const double next = prev - 2.0 * kLn2 - log_recurrence_factor(alpha, prev);
    if (!std::isfinite(next)) throw NumericError("fractal recurrence left the log range");
    seq.log_a[n] = next;
    // b_n = a_{n-1}/2 - a_n = (a_{n-1}/2)(1 - 2 a_n / a_{n-1}).
    seq.log_b[n] = prev - kLn2 + std::log1p(-2.0 * std::exp(next - prev));
    if (seq.underflow_index == 0 && std::exp(next) == 0.0) seq.underflow_index = n;
  }
  return seq;
}

FractalBounds fractal_phi_bounds(const FractalSequence& seq, std::size_t n) {
  if (n < 2 || n > seq.nmax) throw std::out_of_range("fractal bound index must lie in [2, nmax]");
  const double la = seq.log_a[n];
  const double factor = log_recurrence_factor(seq.alpha, seq.log_a[n - 1]);
  const double log_sqrt2 = 0.5 * kLn2;
  const auto nd = static_cast<double>(n);

  FractalBounds fb{};
  fb.n = n;
  fb.log_l2_bound = 0.5 * la;
  fb.log_h2_bound = 0.5 * (factor - kLn2);
  fb.log_interp_half_bound = -0.25 * kLn2 + 0.25 * la + 0.25 * factor;
  fb.log_geometric_bound = -0.25 * kLn2 - 0.5 * kLn2 * nd;
  fb.log_sqrt2_bound = -log_sqrt2 * nd;
  // Both sides of each comparison are built from a handful of roundings.
  const double slack = 1e-12 * std::max(1.0, std::abs(la));
  fb.a_le_4pow = la <= -2.0 * kLn2 * nd + slack;
  fb.interp_le_sqrt2 = fb.log_interp_half_bound <= fb.log_sqrt2_bound + slack;
  fb.tail_sum_bound = std::exp(fb.log_sqrt2_bound) / (std::numbers::sqrt2 - 1.0);
  return fb;
}

bool psi_energy_representable(const FractalSequence& seq, std::size_t n) {
  if (n < 1 || n > seq.nmax) throw std::out_of_range("fractal index out of range");
  // b^{-4} times |chi''|^2 (below 2e3 for the default profile) stays under DBL_MAX.
  constexpr double kMinLogB = -75.0 * std::numbers::ln10;
  return seq.a(n) > 0.0 && seq.log_b[n] > kMinLogB;
}

PsiEnergy fractal_psi_energy(const FractalSequence& seq, std::size_t n, const CutoffProfile& chi,
                             const QuadratureOptions& opts) {
  if (n < 1 || n > seq.nmax) throw std::out_of_range("fractal index out of range");
  if (!psi_energy_representable(seq, n)) {
    throw NumericError("psi energy not representable at this index");
  }
  const double a = seq.a(n);
  const double b = seq.b(n);
  const double e0 = cutoff_energy(chi, 0, opts);
  const double e1 = cutoff_energy(chi, 1, opts);
  const double e2 = cutoff_energy(chi, 2, opts);
  const double alpha_sq = e0 + 2.0 * e1 + e2;

  PsiEnergy out{};
  out.closed_form = 0.5 * alpha_sq + a + 0.5 * b * e0 + e1 / b + 0.5 * e2 / (b * b * b);

  auto density = [](double v, double d1, double d2) { return v * v + 2.0 * d1 * d1 + d2 * d2; };
  Integrand left([&](double t) { return density(chi.value(t), chi.first(t), chi.second(t)); });
  left.breakpoints = {-0.75, -0.5};
  Integrand right([&](double t) {
    const double r = (t - a) / b;
    return density(chi.value(r), chi.first(r) / b, chi.second(r) / (b * b));
  });
  right.breakpoints = {a + 0.5 * b, a + 0.75 * b};
  out.quadrature = integrate_finite(left, -1.0, 0.0, opts).value + a +
                   integrate_finite(right, a, a + b, opts).value;
  out.bound = 0.5 * (1.0 + (1.0 + 1.0 / (b * b * b)) * alpha_sq);
  return out;
}

FractalWitness fractal_witness(const FractalSequence& seq, std::size_t n) {
  if (n < 1 || n > seq.nmax) throw std::out_of_range("fractal index out of range");
  FractalWitness w{n, seq.log_a[n] + std::log(0.75), 0};
  for (std::size_t k = 1; k <= seq.nmax; ++k) {
    if (w.log_t < seq.log_a[k]) ++w.phi_value;
  }
  return w;
}

}  // namespace hinterp

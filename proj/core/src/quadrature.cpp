#include "hinterp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "hinterp/errors.hpp"

namespace hinterp {

namespace {

// Kronrod 15-point abscissae and weights with the embedded 7-point Gauss rule
// (QUADPACK qk15). Gauss nodes are the odd entries of kXgk.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

template <class F>
Panel kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[i] * (f1 + f2);
    abs_sum += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = std::abs((kronrod - gauss) * half);
  p.abs_value = abs_sum * std::abs(half);
  if (!std::isfinite(p.value) || !std::isfinite(p.error)) {
    std::ostringstream msg;
    msg << "non-finite integrand value on [" << a << ", " << b << "]";
    throw NumericError(msg.str());
  }
  return p;
}

// Core engine over [a, b] split at the sorted interior cuts.
template <class F>
QuadratureResult adaptive(const F& f, double a, double b, std::vector<double> cuts,
                          const QuadratureOptions& opts) {
  if (!(a < b)) throw std::invalid_argument("integration requires a < b");
  if (!(opts.rel_tol > 0.0) && !(opts.abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature needs a positive tolerance");
  }
  std::vector<double> edges{a};
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts) {
    if (c > edges.back() && c < b) edges.push_back(c);
  }
  edges.push_back(b);

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> active;
  std::vector<Panel> frozen;
  std::size_t evals = 0;
  double total = 0.0;
  double total_err = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = kronrod15(f, edges[i], edges[i + 1]);
    evals += 15;
    total += p.value;
    total_err += p.error;
    total_abs += p.abs_value;
    active.push(p);
  }

  auto converged = [&] {
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    return total_err <= tol || total_err <= 50.0 * kEps * total_abs;
  };

  while (!converged()) {
    if (active.empty()) {
      throw NumericError("adaptive quadrature cannot subdivide further");
    }
    if (evals + 30 > opts.max_evaluations) {
      std::ostringstream msg;
      msg << "adaptive quadrature budget of " << opts.max_evaluations
          << " evaluations exhausted on [" << a << ", " << b << "] (error "
          << total_err << ", value " << total << ")";
      throw NumericError(msg.str());
    }
    const Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    const Panel left = kronrod15(f, worst.a, mid);
    const Panel right = kronrod15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    active.push(left);
    active.push(right);
  }

  std::vector<Panel> panels = std::move(frozen);
  while (!active.empty()) {
    panels.push_back(active.top());
    active.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value;
  CompensatedSum error;
  for (const Panel& p : panels) {
    value.add(p.value);
    error.add(p.error);
  }
  return {value.value(), error.value(), evals};
}

std::vector<double> interior_cuts(const Integrand& f) {
  std::vector<double> cuts = f.breakpoints;
  cuts.insert(cuts.end(), f.singular_points.begin(), f.singular_points.end());
  return cuts;
}

void require_evaluator(const Integrand& f) {
  if (!f.evaluator) throw std::invalid_argument("integrand has no evaluator");
  if (!f.singular_points.empty() && !f.fallback) {
    throw std::invalid_argument(
        "integrand lists singular points but supplies no series fallback");
  }
}

}  // namespace

double Integrand::operator()(double x) const {
  for (double s : singular_points) {
    if (std::abs(x - s) < window) return fallback(x);
  }
  return evaluator(x);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  require_evaluator(f);
  return adaptive(f, a, b, interior_cuts(f), opts);
}

QuadratureResult integrate_tail(const Integrand& f, double a,
                                const QuadratureOptions& opts) {
  require_evaluator(f);
  if (!(a > 0.0)) throw std::invalid_argument("tail integral needs a > 0");
  if (!(f.decay > 1.0)) {
    throw std::invalid_argument("semi-infinite integration needs decay hint > 1");
  }
  std::vector<double> cuts;
  for (double t : interior_cuts(f)) {
    if (t > a) cuts.push_back(a / t);
  }
  auto mapped = [&f, a](double u) {
    const double t = a / u;
    if (!std::isfinite(t)) return 0.0;
    const double jac = t / u;
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * jac;
  };
  return adaptive(mapped, 0.0, 1.0, std::move(cuts), opts);
}

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureOptions& opts) {
  const QuadratureResult head = integrate_finite(f, 0.0, 1.0, opts);
  const QuadratureResult tail = integrate_tail(f, 1.0, opts);
  return {head.value + tail.value, head.error + tail.error,
          head.evaluations + tail.evaluations};
}

QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureOptions& opts) {
  Integrand mirrored = f;
  mirrored.evaluator = [g = f.evaluator](double x) { return g(-x); };
  if (f.fallback) {
    mirrored.fallback = [g = f.fallback](double x) { return g(-x); };
  }
  for (double& s : mirrored.singular_points) s = -s;
  for (double& s : mirrored.breakpoints) s = -s;
  const QuadratureResult right = integrate_semi_infinite(f, opts);
  const QuadratureResult left = integrate_semi_infinite(mirrored, opts);
  return {right.value + left.value, right.error + left.error,
          right.evaluations + left.evaluations};
}

SeriesResult sum_series(const SeriesTerms& s, const SeriesOptions& opts) {
  if (!s.term || !s.tail_bound) {
    throw std::invalid_argument("series needs both term and tail_bound");
  }
  CompensatedSum sum;
  std::size_t n = opts.first_index;
  for (std::size_t count = 1; count <= opts.max_terms; ++count, ++n) {
    sum.add(s.term(n));
    const double bound = s.tail_bound(n);
    if (!std::isfinite(bound)) {
      throw NumericError("series tail bound is not finite");
    }
    if (bound <= opts.rel_tol * std::abs(sum.value())) {
      return {sum.value(), bound, count};
    }
  }
  std::ostringstream msg;
  msg << "series summation budget of " << opts.max_terms << " terms exhausted";
  throw NumericError(msg.str());
}

}  // namespace hinterp

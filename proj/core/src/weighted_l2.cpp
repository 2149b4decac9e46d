#include "hinterp/weighted_l2.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hinterp/errors.hpp"
#include "hinterp/normalization.hpp"

namespace hinterp {

namespace detail {

void require_shape(const WeightedSpacePair& space, std::size_t n) {
  if (space.size() != n) {
    std::ostringstream msg;
    msg << "element has " << n << " values but the space has " << space.size() << " atoms";
    throw std::invalid_argument(msg.str());
  }
}

void require_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be positive");
}

void require_theta_open(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("theta must lie in the open interval (0, 1)");
  }
}

}  // namespace detail

namespace {

double relative_deviation(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// sum_i mu_i w_theta,i phi_i^2 for theta in [0, 1], endpoints included.
double theta_norm(const WeightedSpacePair& space, std::span<const double> phi, double theta) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    acc.add(space[i].mu * space.weight(i, theta) * phi[i] * phi[i]);
  }
  return std::sqrt(acc.value());
}

}  // namespace

WeightedSpacePair::WeightedSpacePair(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("a weighted space needs at least one atom");
  for (const Atom& a : atoms_) {
    const bool ok = a.mu > 0.0 && a.w0 > 0.0 && a.w1 > 0.0 && std::isfinite(a.mu) &&
                    std::isfinite(a.w0) && std::isfinite(a.w1);
    if (!ok) throw std::invalid_argument("atom mass and weights must be positive and finite");
  }
}

double WeightedSpacePair::weight(std::size_t i, double theta) const {
  const Atom& a = atoms_[i];
  if (theta == 0.0) return a.w0;
  if (theta == 1.0) return a.w1;
  return std::pow(a.w0, 1.0 - theta) * std::pow(a.w1, theta);
}

WeightedSpacePair WeightedSpacePair::reiterated(double theta0, double theta1) const {
  if (!(theta0 >= 0.0 && theta0 <= 1.0 && theta1 >= 0.0 && theta1 <= 1.0)) {
    throw std::invalid_argument("reiteration exponents must lie in [0, 1]");
  }
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    out.push_back({atoms_[i].mu, weight(i, theta0), weight(i, theta1)});
  }
  return WeightedSpacePair(std::move(out));
}

WeightedSpacePair WeightedSpacePair::dual() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back({a.mu, 1.0 / a.w0, 1.0 / a.w1});
  return WeightedSpacePair(std::move(out));
}

WeightedSpacePair WeightedSpacePair::swapped() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back({a.mu, a.w1, a.w0});
  return WeightedSpacePair(std::move(out));
}

double k_norm_by_quadrature(const WeightedSpacePair& space, std::span<const double> phi,
                            double theta, const InterpolationOptions& opts) {
  detail::require_shape(space, phi.size());
  detail::require_theta_open(theta);
  // t^{-1-2 theta} K(t)^2 behaves like t^{1-2theta} at 0 and t^{-1-2theta} at infinity.
  Integrand integrand(
      [&space, phi, theta](double t) {
        const double t2 = t * t;
        const double power = std::pow(t, 1.0 - 2.0 * theta);
        double sum = 0.0;
        for (std::size_t i = 0; i < phi.size(); ++i) {
          const Atom& a = space[i];
          sum += a.mu * phi[i] * phi[i] * a.w0 * a.w1 / (a.w0 + t2 * a.w1);
        }
        return power * sum;
      },
      1.0 + 2.0 * theta);
  const double integral = integrate_semi_infinite(integrand, opts.quadrature).value;
  return opts.normalization_scale * n_theta_2(theta) * std::sqrt(integral);
}

JNormResult j_norm_via_optimal_density(const WeightedSpacePair& space,
                                       std::span<const double> phi, double theta,
                                       const InterpolationOptions& opts) {
  detail::require_shape(space, phi.size());
  detail::require_theta_open(theta);
  const double n = n_theta_2(theta);
  const double n2 = n * n;

  // int_0^inf f_i(t)/t dt = phi_i * w_theta N^2 int_0^inf t^{2theta-1}/(w0 + w1 t^2) dt
  double worst = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Atom& a = space[i];
    Integrand density(
        [a, theta](double t) { return std::pow(t, 2.0 * theta - 1.0) / (a.w0 + a.w1 * t * t); },
        3.0 - 2.0 * theta);
    const double factor =
        space.weight(i, theta) * n2 * integrate_semi_infinite(density, opts.quadrature).value;
    worst = std::max(worst, std::abs(factor - 1.0));
  }
  if (worst > 1e-8) {
    std::ostringstream msg;
    msg << "optimal density fails to reconstruct phi (relative deviation " << worst << ")";
    throw std::logic_error(msg.str());
  }

  // t^{-1-2theta} (||f||_0^2 + t^2 ||f||_1^2) = N^4 sum mu w_theta^2 phi^2 t^{2theta-1}/(w0 + w1 t^2)
  Integrand energy(
      [&space, phi, theta, n2](double t) {
        const double power = std::pow(t, 2.0 * theta - 1.0);
        double sum = 0.0;
        for (std::size_t i = 0; i < phi.size(); ++i) {
          const Atom& a = space[i];
          const double wt = space.weight(i, theta);
          sum += a.mu * wt * wt * phi[i] * phi[i] / (a.w0 + a.w1 * t * t);
        }
        return n2 * n2 * power * sum;
      },
      3.0 - 2.0 * theta);
  const double integral = integrate_semi_infinite(energy, opts.quadrature).value;
  const double scaled_n = opts.normalization_scale * n;
  return {std::sqrt(integral) / scaled_n, worst};
}

double delta_norm(const WeightedSpacePair& space, std::span<const double> phi) {
  return std::max(norm_j(space, phi, Endpoint::zero), norm_j(space, phi, Endpoint::one));
}

double sigma_norm_quadratic(const WeightedSpacePair& space, std::span<const double> phi) {
  return k_functional(space, phi, 1.0);
}

CoupleOperator::CoupleOperator(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("operator entries do not match its dimensions");
  }
  for (double e : entries_) {
    if (!std::isfinite(e)) throw std::invalid_argument("operator entries must be finite");
  }
}

CoupleOperator CoupleOperator::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return CoupleOperator(n, n, std::move(e));
}

CoupleOperator CoupleOperator::diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return CoupleOperator(n, n, std::move(e));
}

double operator_norm_weighted(const CoupleOperator& a, std::span<const double> source_weight,
                              std::span<const double> target_weight,
                              const PowerIterationOptions& opts) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (source_weight.size() != n || target_weight.size() != m) {
    throw std::invalid_argument("weights do not match operator dimensions");
  }
  for (double w : source_weight) {
    if (!(w > 0.0)) throw std::invalid_argument("source weights must be positive");
  }
  for (double w : target_weight) {
    if (!(w > 0.0)) throw std::invalid_argument("target weights must be positive");
  }

  // b = diag(sqrt(tw)) A diag(1/sqrt(sw)); iterate on the normal matrix b^T b.
  std::vector<double> b(m * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      b[r * n + c] = std::sqrt(target_weight[r]) * a(r, c) / std::sqrt(source_weight[c]);
    }
  }
  std::vector<double> normal(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < m; ++r) s += b[r * n + i] * b[r * n + j];
      normal[i * n + j] = s;
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  std::vector<double> w(n);
  auto normalize = [](std::vector<double>& x) {
    double s = 0.0;
    for (double e : x) s += e * e;
    const double len = std::sqrt(s);
    for (double& e : x) e /= len;
    return len;
  };
  for (double& e : v) e = dist(rng) + 2.0;  // seeded, strictly positive start
  normalize(v);

  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += normal[i * n + j] * v[j];
      w[i] = s;
    }
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (w[i] - lambda * v[i]) * (w[i] - lambda * v[i]);
    res = std::sqrt(res);
    if (lambda <= 0.0 && res == 0.0) return 0.0;
    if (res <= opts.tol * lambda) return std::sqrt(lambda);
    v = w;
    if (normalize(v) == 0.0) return 0.0;
  }
  throw NumericError("power iteration did not converge");
}

OperatorBoundReport interpolated_operator_bound_check(const CoupleOperator& a,
                                                      const WeightedSpacePair& source,
                                                      const WeightedSpacePair& target,
                                                      double theta) {
  detail::require_theta_open(theta);
  if (a.cols() != source.size() || a.rows() != target.size()) {
    throw std::invalid_argument("operator dimensions do not match the spaces");
  }
  auto weights = [](const WeightedSpacePair& s, double th) {
    std::vector<double> w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) w[i] = s[i].mu * s.weight(i, th);
    return w;
  };
  OperatorBoundReport r{};
  r.m0 = operator_norm_weighted(a, weights(source, 0.0), weights(target, 0.0));
  r.m1 = operator_norm_weighted(a, weights(source, 1.0), weights(target, 1.0));
  r.m_theta = operator_norm_weighted(a, weights(source, theta), weights(target, theta));
  r.bound = std::pow(r.m0, 1.0 - theta) * std::pow(r.m1, theta);
  r.holds = r.m_theta <= r.bound + 1e-9;
  return r;
}

CheckReport reiteration_check(const WeightedSpacePair& space, double theta0, double theta1,
                              double eta, std::span<const Element> elements) {
  detail::require_theta_open(eta);
  const WeightedSpacePair pair = space.reiterated(theta0, theta1);
  const double theta = (1.0 - eta) * theta0 + eta * theta1;
  double worst = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    worst = std::max(worst, relative_deviation(pair.weight(i, eta), space.weight(i, theta)));
  }
  for (const Element& phi : elements) {
    detail::require_shape(space, phi.size());
    worst = std::max(worst, relative_deviation(theta_norm(pair, phi, eta),
                                               theta_norm(space, phi, theta)));
  }
  return {worst <= 1e-10, worst};
}

double dual_norm_at_maximizer(const WeightedSpacePair& space, std::span<const double> psi,
                              double theta) {
  detail::require_shape(space, psi.size());
  std::vector<double> phi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) phi[i] = psi[i] / space.weight(i, theta);
  const double len = theta_norm(space, phi, theta);
  if (len == 0.0) return 0.0;
  CompensatedSum pairing;
  for (std::size_t i = 0; i < psi.size(); ++i) pairing.add(space[i].mu * phi[i] * psi[i]);
  return std::abs(pairing.value()) / len;
}

CheckReport duality_check(const WeightedSpacePair& space, double theta,
                          std::span<const Element> psis) {
  detail::require_theta_open(theta);
  const WeightedSpacePair dual = space.dual();
  double worst = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    worst = std::max(worst, relative_deviation(dual.weight(i, theta), 1.0 / space.weight(i, theta)));
  }
  for (const Element& psi : psis) {
    const double by_maximizer = dual_norm_at_maximizer(space, psi, theta);
    const double interpolated = k_norm(dual, std::span<const double>(psi), theta);
    worst = std::max(worst, relative_deviation(by_maximizer, interpolated));
  }
  return {worst <= 1e-10, worst};
}

}  // namespace hinterp

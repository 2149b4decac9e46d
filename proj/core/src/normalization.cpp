#include "hinterp/normalization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hinterp {

namespace {

void require_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("theta must lie in the open interval (0, 1)");
  }
}

// int_0^1 s^{c-1} (1 + s^2)^{-q/2} ds with v = s^c, which removes the
// algebraic endpoint behaviour: (1/c) int_0^1 (1 + v^{2/c})^{-q/2} dv.
double half_integral(double c, double q, const QuadratureOptions& opts) {
  auto f = [c, q](double v) { return std::pow(1.0 + std::pow(v, 2.0 / c), -0.5 * q); };
  return integrate_finite(f, 0.0, 1.0, opts).value / c;
}

}  // namespace

Exponent Exponent::finite(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("exponent q must be a finite value >= 1");
  }
  return Exponent(q, false);
}

double Exponent::value() const {
  if (infinite_) throw std::logic_error("exponent is infinite");
  return q_;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return finite(1.0);
  if (q_ == 1.0) return infinity();
  return finite(q_ / (q_ - 1.0));
}

ThetaQ::ThetaQ(double theta, Exponent q) : theta_(theta), q_(q) {
  require_theta(theta);
}

double weight_g(double s) { return s / std::sqrt(1.0 + s * s); }

double weight_g_theta(double theta, double t) {
  return std::pow(t, theta) / std::sqrt(1.0 + t * t);
}

double weight_g_theta_argmax(double theta) {
  require_theta(theta);
  return std::sqrt(theta / (1.0 - theta));
}

double n_theta_2(double theta) {
  require_theta(theta);
  return std::sqrt(2.0 / std::numbers::pi * std::sin(std::numbers::pi * theta));
}

double n_theta_q_by_quadrature(const ThetaQ& p, const QuadratureOptions& opts) {
  const double q = p.q().value();
  const double theta = p.theta();
  // (1, inf) folded onto (0, 1) by s -> 1/s turns exponent q(1-theta) into q theta.
  const double integral =
      half_integral(q * (1.0 - theta), q, opts) + half_integral(q * theta, q, opts);
  return std::pow(integral, -1.0 / q);
}

double n_theta_q(const ThetaQ& p) {
  const double theta = p.theta();
  if (p.q().is_infinite()) {
    return std::pow(theta, -0.5 * theta) * std::pow(1.0 - theta, -0.5 * (1.0 - theta));
  }
  if (p.q().value() == 2.0) return n_theta_2(theta);
  return n_theta_q_by_quadrature(p);
}

double n_prime_theta_q(const ThetaQ& p) {
  if (p.q().is_infinite()) return 1.0;
  const double q = p.q().value();
  return std::pow(q * p.theta() * (1.0 - p.theta()), 1.0 / q);
}

double beta_integral(double alpha, double q, double a, double b) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("beta_integral needs a finite q >= 1");
  }
  if (!(alpha > -1.0 && alpha < q - 1.0)) {
    throw std::invalid_argument("beta_integral needs -1 < alpha < q - 1");
  }
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("beta_integral needs a > 0 and b > 0");
  }
  const ThetaQ p((q - alpha - 1.0) / q, Exponent::finite(q));
  return std::pow(a, 0.5 * (alpha + 1.0 - q)) * std::pow(b, -0.5 * (1.0 + alpha)) *
         std::pow(n_theta_q(p), -q);
}

}  // namespace hinterp

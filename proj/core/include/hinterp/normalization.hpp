#pragma once

#include "hinterp/quadrature.hpp"

namespace hinterp {

/// The exponent q in [1, inf]. Infinity is a distinguished state, never a
/// floating-point infinity inside arithmetic.
class Exponent {
 public:
  static Exponent finite(double q);
  static Exponent infinity() { return Exponent(0.0, true); }

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws std::logic_error for q = inf.
  double value() const;
  /// q* with 1/q + 1/q* = 1.
  Exponent conjugate() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(double q, bool infinite) : q_(q), infinite_(infinite) {}
  double q_;
  bool infinite_;
};

/// Validated interpolation parameters: 0 < theta < 1, q in [1, inf].
class ThetaQ {
 public:
  ThetaQ(double theta, Exponent q);

  double theta() const { return theta_; }
  const Exponent& q() const { return q_; }
  Exponent q_star() const { return q_.conjugate(); }

 private:
  double theta_;
  Exponent q_;
};

/// g(s) = s / sqrt(1 + s^2).
double weight_g(double s);

/// g_theta(t) = t^theta / sqrt(1 + t^2).
double weight_g_theta(double theta, double t);

/// Location sqrt(theta / (1 - theta)) of the global maximum of g_theta.
double weight_g_theta_argmax(double theta);

/// N_{theta,q} = ||g||_{theta,q}^{-1}. Closed forms for q = 2 and q = inf,
/// quadrature of the defining integral otherwise.
double n_theta_q(const ThetaQ& p);

/// Quadrature of the defining integral for any finite q. Exposed so the q = 2
/// closed form can be checked against it.
double n_theta_q_by_quadrature(const ThetaQ& p, const QuadratureOptions& opts = {
                                                    .rel_tol = 1e-13});

/// sqrt((2/pi) sin(pi theta)), the q = 2 normalization.
double n_theta_2(double theta);

/// N'_{theta,q} = ||min(1, .)||_{theta,q}^{-1}.
double n_prime_theta_q(const ThetaQ& p);

/// int_0^inf t^alpha / (a + b t^2)^{q/2} dt for -1 < alpha < q - 1, a, b > 0,
/// reduced to a normalization constant.
double beta_integral(double alpha, double q, double a, double b);

}  // namespace hinterp

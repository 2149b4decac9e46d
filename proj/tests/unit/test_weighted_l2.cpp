#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hinterp/normalization.hpp"
#include "hinterp/weighted_l2.hpp"
#include "hinterp_tools/random_cases.hpp"

using namespace hinterp;
using hinterp::tools::Rng;
using doctest::Approx;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

WeightedSpacePair pair_41() { return WeightedSpacePair({{1, 1, 4}, {1, 1, 1}}); }

// Largest singular value of diag(sqrt(tw)) A diag(1/sqrt(sw)).
double svd_norm(const CoupleOperator& a, const std::vector<double>& sw,
                const std::vector<double>& tw) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = std::sqrt(tw[r]) * a(r, c) / std::sqrt(sw[c]);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

}  // namespace

TEST_CASE("space validation") {
  CHECK_THROWS_AS(WeightedSpacePair({}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedSpacePair({{1, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedSpacePair({{-1, 1, 1}}), std::invalid_argument);
  const WeightedSpacePair s({{1, 1, 1}});
  CHECK_THROWS_AS(norm_j(s, Element{1, 2}, Endpoint::zero), std::invalid_argument);
  CHECK_THROWS_AS(k_functional(s, Element{1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(k_norm(s, Element{1}, 1.0), std::invalid_argument);
}

TEST_CASE("endpoint norms and K-functional examples") {
  const WeightedSpacePair one({{1, 1, 1}});
  CHECK(norm_j(one, Element{1}, Endpoint::zero) == 1.0);
  CHECK(norm_j(one, Element{1}, Endpoint::one) == 1.0);
  CHECK(norm_j(pair_41(), Element{1, 1}, Endpoint::one) == Approx(std::sqrt(5.0)));
  CHECK(k_functional(one, Element{1}, 1.0) == Approx(std::sqrt(0.5)));
  CHECK(k_functional(pair_41(), Element{1, 1}, 1.0) == Approx(std::sqrt(1.3)));

  const auto [phi0, phi1] = optimal_split(one, Element{1}, 1.0);
  CHECK(phi0[0] == Approx(0.5));
  CHECK(phi1[0] == Approx(0.5));
}

TEST_CASE("brute-force K minimization agrees with the closed form") {
  Rng rng(7);
  for (int c = 0; c < 20; ++c) {
    const auto space = tools::random_space(rng, 2);
    const auto phi = tools::random_element(rng, 2);
    const double t = std::pow(10.0, tools::uniform(rng, -1, 1));
    // The objective separates over atoms; minimize each on a fine grid.
    double total = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const Atom& a = space[i];
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 20000; ++k) {
        const double x = phi[i] * (-0.5 + 2.0 * k / 20000.0);
        const double v = a.mu * (a.w0 * (phi[i] - x) * (phi[i] - x) + t * t * a.w1 * x * x);
        best = std::min(best, v);
      }
      total += best;
    }
    CHECK(std::abs(std::sqrt(total) - k_functional(space, phi, t)) < 1e-3);
  }
}

TEST_CASE("optimal split is a local minimum and reproduces K") {
  Rng rng(11);
  for (int c = 0; c < 20; ++c) {
    const auto space = tools::random_space(rng, 3);
    const auto phi = tools::random_element(rng, 3);
    const double t = 0.7;
    auto [phi0, phi1] = optimal_split(space, phi, t);
    auto objective = [&](const Element& a, const Element& b) {
      const double n0 = norm_j(space, a, Endpoint::zero);
      const double n1 = norm_j(space, b, Endpoint::one);
      return n0 * n0 + t * t * n1 * n1;
    };
    const double k = k_functional(space, phi, t);
    CHECK(objective(phi0, phi1) == Approx(k * k).epsilon(1e-12));
    for (std::size_t i = 0; i < 3; ++i) {
      for (double eps : {1e-4, -1e-4}) {
        Element a = phi0, b = phi1;
        a[i] -= eps;
        b[i] += eps;
        CHECK(objective(a, b) >= objective(phi0, phi1));
      }
    }
  }
}

TEST_CASE("K bound by the one-term functional") {
  Rng rng(3);
  for (int c = 0; c < 50; ++c) {
    const auto space = tools::random_space(rng, 3);
    const auto phi = tools::random_element(rng, 3);
    const double t = std::pow(10.0, tools::uniform(rng, -2, 2));
    const double n0 = norm_j(space, phi, Endpoint::zero);
    const double n1 = norm_j(space, phi, Endpoint::one);
    CHECK(k_functional(space, phi, t) <= t * n0 * n1 / std::sqrt(n0 * n0 + t * t * n1 * n1) * (1 + 1e-12));
  }
}

TEST_CASE("K-norm examples and routes") {
  const Element phi{1, 1};
  CHECK(k_norm(pair_41(), phi, 0.5) == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rel(k_norm_by_quadrature(pair_41(), phi, 0.5), std::sqrt(3.0)) < 1e-10);

  const WeightedSpacePair equal({{0.5, 2, 2}, {1.5, 3, 3}});
  const Element psi{0.3, -1.2};
  for (double theta : {0.1, 0.5, 0.9}) {
    CHECK(k_norm(equal, psi, theta) == Approx(norm_j(equal, psi, Endpoint::zero)).epsilon(1e-14));
    CHECK(j_norm_via_optimal_density(equal, psi, theta).value ==
          Approx(norm_j(equal, psi, Endpoint::zero)).epsilon(1e-9));
  }
  const double lambda = 0.2;
  const WeightedSpacePair single({{1, 1, 1 / lambda}});
  CHECK(j_norm_via_optimal_density(single, Element{1}, 0.3).value ==
        Approx(std::pow(lambda, -0.15)).epsilon(1e-9));
}

TEST_CASE("K = J and the exponent-theta bound on random pairs") {
  Rng rng(2024);
  for (int c = 0; c < 30; ++c) {
    const auto space = tools::random_space(rng, 3);
    const auto phi = tools::random_element(rng, 3);
    const double n0 = norm_j(space, phi, Endpoint::zero);
    const double n1 = norm_j(space, phi, Endpoint::one);
    for (double theta : {0.25, 0.5, 0.75}) {
      const double k = k_norm(space, phi, theta);
      const auto j = j_norm_via_optimal_density(space, phi, theta);
      CHECK(rel(j.value, k) < 1e-8);
      CHECK(j.reconstruction_deviation < 1e-8);
      CHECK(rel(k_norm_by_quadrature(space, phi, theta), k) < 1e-8);
      CHECK(k <= std::pow(n0, 1 - theta) * std::pow(n1, theta) * (1 + 1e-12));
    }
  }
}

TEST_CASE("complex elements use moduli") {
  const WeightedSpacePair s({{1, 2, 3}, {0.5, 1, 4}});
  const ComplexElement z{{3, 4}, {0, -1}};
  const Element m = moduli(std::span<const std::complex<double>>(z));
  CHECK(m[0] == Approx(5.0));
  CHECK(k_norm(s, z, 0.4) == Approx(k_norm(s, m, 0.4)).epsilon(1e-15));
  CHECK(k_functional(s, z, 2.0) == Approx(k_functional(s, m, 2.0)).epsilon(1e-15));
}

TEST_CASE("delta and sigma norms") {
  const WeightedSpacePair one({{1, 1, 1}});
  CHECK(delta_norm(one, Element{1}) == 1.0);
  CHECK(sigma_norm_quadratic(one, Element{1}) == Approx(std::sqrt(0.5)));
  Rng rng(5);
  for (int c = 0; c < 50; ++c) {
    const auto space = tools::random_space(rng, 3);
    const auto phi = tools::random_element(rng, 3);
    CHECK(delta_norm(space, phi) >= sigma_norm_quadratic(space, phi));
  }
}

TEST_CASE("operator norm against an SVD oracle") {
  const std::vector<double> ones{1, 1};
  CHECK(operator_norm_weighted(CoupleOperator::identity(2), ones, ones) == Approx(1.0).epsilon(1e-12));
  const std::vector<double> d{0.5, -3.0, 2.0};
  const std::vector<double> ones3{1, 1, 1};
  CHECK(operator_norm_weighted(CoupleOperator::diagonal(d), ones3, ones3) == Approx(3.0).epsilon(1e-10));
  const CoupleOperator shear(2, 2, {1, 1, 0, 1});
  CHECK(operator_norm_weighted(shear, ones, ones) ==
        Approx(std::sqrt((3 + std::sqrt(5.0)) / 2)).epsilon(1e-10));
  const CoupleOperator upper(2, 2, {1, 2, 0, 1});
  CHECK(operator_norm_weighted(upper, ones, ones) == Approx(1 + std::sqrt(2.0)).epsilon(1e-10));

  Rng rng(99);
  for (int c = 0; c < 50; ++c) {
    const auto a = tools::random_operator(rng, 3, 3);
    std::vector<double> sw(3), tw(3);
    for (auto& w : sw) w = std::pow(10.0, tools::uniform(rng, -2, 2));
    for (auto& w : tw) w = std::pow(10.0, tools::uniform(rng, -2, 2));
    CHECK(rel(operator_norm_weighted(a, sw, tw), svd_norm(a, sw, tw)) < 1e-8);
  }
}

TEST_CASE("interpolated operator bound") {
  Rng rng(42);
  for (int c = 0; c < 50; ++c) {
    const auto src = tools::random_space(rng, 3);
    const auto dst = tools::random_space(rng, 3);
    const auto a = tools::random_operator(rng, 3, 3);
    for (double theta : {0.25, 0.5, 0.75}) {
      const auto rep = interpolated_operator_bound_check(a, src, dst, theta);
      CHECK(rep.holds);
      CHECK(rep.m_theta <= rep.bound + 1e-9);
    }
  }
  const std::vector<double> d{0.5, -3.0, 2.0};
  const WeightedSpacePair s({{1, 2, 5}, {1, 3, 1}, {2, 1, 1}});
  const auto rep = interpolated_operator_bound_check(CoupleOperator::diagonal(d), s, s, 0.4);
  CHECK(rep.m_theta == Approx(3.0).epsilon(1e-9));
  CHECK(rep.bound == Approx(3.0).epsilon(1e-9));
}

TEST_CASE("reiteration and duality") {
  const WeightedSpacePair s({{1, 2, 5}, {0.3, 3, 1}, {2, 0.1, 7}});
  const std::vector<Element> els{{1, -2, 0.5}, {0.1, 0.2, 0.3}};
  CHECK(reiteration_check(s, 0.0, 1.0, 0.3, els).passed);
  CHECK(reiteration_check(s, 0.25, 0.75, 0.5, els).passed);
  const auto r = s.reiterated(0.25, 0.75);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(r.weight(i, 0.5) == Approx(s.weight(i, 0.5)).epsilon(1e-14));
  }
  CHECK(duality_check(s, 0.3, els).passed);
  const WeightedSpacePair equal({{1, 2, 2}});
  CHECK(dual_norm_at_maximizer(equal, Element{3}, 0.4) == Approx(3 / std::sqrt(2.0)).epsilon(1e-14));

  Rng rng(8);
  for (int c = 0; c < 100; ++c) {
    const auto space = tools::random_space(rng, 3);
    double t0 = tools::uniform(rng, 0, 1), t1 = tools::uniform(rng, 0, 1);
    if (t0 > t1) std::swap(t0, t1);
    const std::vector<Element> e{tools::random_element(rng, 3)};
    const auto rr = reiteration_check(space, t0, t1, tools::uniform(rng, 0.01, 0.99), e);
    CHECK(rr.max_deviation <= 1e-10);
    const auto dd = duality_check(space, tools::uniform(rng, 0.01, 0.99), e);
    CHECK(dd.max_deviation <= 1e-10);
  }
}

TEST_CASE("normalization hook perturbs only the normalized routes") {
  const Element phi{1, 1};
  InterpolationOptions opts;
  opts.normalization_scale = 1.01;
  const double k = k_norm(pair_41(), phi, 0.5);
  CHECK(rel(k_norm_by_quadrature(pair_41(), phi, 0.5, opts), k) > 5e-3);
  CHECK(rel(j_norm_via_optimal_density(pair_41(), phi, 0.5, opts).value, k) > 5e-3);
}

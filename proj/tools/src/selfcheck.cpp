#include <algorithm>
#include <array>
#include <cmath>
#include <exception>

#include "hinterp_tools/commands.hpp"
#include "hinterp_tools/random_cases.hpp"
#include "hinterp/weighted_l2.hpp"

namespace hinterp::tools {

namespace {

constexpr std::array<double, 3> kThetas{0.25, 0.5, 0.75};
constexpr std::size_t kAtoms = 3;

class Suite {
 public:
  Suite(std::string name, double tol) : result_{std::move(name), 0, 0, 0.0}, tol_(tol) {}

  // Records one case; a case fails when any deviation exceeds the tolerance.
  void record(double deviation) {
    ++result_.cases;
    result_.max_deviation = std::max(result_.max_deviation, deviation);
    if (!(deviation <= tol_)) ++result_.failures;
  }
  void record_exception() {
    ++result_.cases;
    ++result_.failures;
  }
  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
  double tol_;
};

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, std::size_t cases,
                                       double normalization_scale) {
  Rng rng(seed);
  InterpolationOptions iopts;
  iopts.normalization_scale = normalization_scale;

  Suite k_eq_j("k_eq_j", 1e-8);
  Suite exponent("exponent_theta", 0.0);
  Suite reiteration("reiteration", 1e-10);
  Suite duality("duality", 1e-10);
  Suite symmetry("symmetry", 1e-8);

  for (std::size_t c = 0; c < cases; ++c) {
    const WeightedSpacePair space = random_space(rng, kAtoms);
    const Element phi = random_element(rng, kAtoms);
    try {
      double worst = 0.0;
      for (double theta : kThetas) {
        const double k = k_norm(space, phi, theta);
        worst = std::max(worst, rel(j_norm_via_optimal_density(space, phi, theta, iopts).value, k));
        worst = std::max(worst, rel(k_norm_by_quadrature(space, phi, theta, iopts), k));
      }
      k_eq_j.record(worst);
    } catch (const std::exception&) {
      k_eq_j.record_exception();
    }

    const WeightedSpacePair target = random_space(rng, kAtoms);
    const CoupleOperator op = random_operator(rng, kAtoms, kAtoms);
    try {
      double excess = 0.0;
      for (double theta : kThetas) {
        const OperatorBoundReport rep = interpolated_operator_bound_check(op, space, target, theta);
        if (!rep.holds) excess = std::max(excess, (rep.m_theta - rep.bound) / rep.bound);
      }
      exponent.record(excess);
    } catch (const std::exception&) {
      exponent.record_exception();
    }

    double t0 = uniform(rng, 0.0, 1.0);
    double t1 = uniform(rng, 0.0, 1.0);
    if (t0 > t1) std::swap(t0, t1);
    const double eta = uniform(rng, 0.01, 0.99);
    const std::vector<Element> elements{random_element(rng, kAtoms), random_element(rng, kAtoms)};
    try {
      reiteration.record(reiteration_check(space, t0, t1, eta, elements).max_deviation);
    } catch (const std::exception&) {
      reiteration.record_exception();
    }

    const double theta = uniform(rng, 0.01, 0.99);
    const std::vector<Element> psis{random_element(rng, kAtoms), random_element(rng, kAtoms)};
    try {
      duality.record(duality_check(space, theta, psis).max_deviation);
    } catch (const std::exception&) {
      duality.record_exception();
    }

    try {
      // Swapping the endpoints maps theta to 1 - theta.
      const WeightedSpacePair swapped = space.swapped();
      double worst = 0.0;
      for (double th : kThetas) {
        const double k = k_norm(space, phi, th);
        worst = std::max(worst, rel(k_norm(swapped, phi, 1.0 - th), k));
        worst = std::max(worst,
                         rel(j_norm_via_optimal_density(swapped, phi, 1.0 - th, iopts).value, k));
      }
      symmetry.record(worst);
    } catch (const std::exception&) {
      symmetry.record_exception();
    }
  }
  return {k_eq_j.result(), exponent.result(), reiteration.result(), duality.result(),
          symmetry.result()};
}

}  // namespace hinterp::tools

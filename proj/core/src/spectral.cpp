#include "hinterp/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hinterp/errors.hpp"

namespace hinterp {

SpectralDecomposition::SpectralDecomposition(std::vector<double> lambdas,
                                             std::function<double(std::size_t)> extension,
                                             std::optional<EigenvalueGrowth> growth)
    : lambdas_(std::move(lambdas)), extension_(std::move(extension)), growth_(growth) {
  double previous = std::numeric_limits<double>::infinity();
  for (double l : lambdas_) {
    if (!(l > 0.0) || l > previous) {
      throw std::invalid_argument("eigenvalues must be positive and nonincreasing");
    }
    previous = l;
  }
}

double SpectralDecomposition::lambda(std::size_t j) const {
  if (j == 0) throw std::out_of_range("eigenvalue indices start at 1");
  if (j <= lambdas_.size()) return lambdas_[j - 1];
  if (!extension_) {
    std::ostringstream msg;
    msg << "eigenvalue " << j << " requested but only " << lambdas_.size() << " are stored";
    throw std::out_of_range(msg.str());
  }
  return extension_(j);
}

SpectralDecomposition dirichlet_interval_decomposition(std::size_t jmax) {
  if (jmax == 0) throw std::invalid_argument("jmax must be at least 1");
  auto rule = [](std::size_t j) {
    const double jp = static_cast<double>(j) * std::numbers::pi;
    return 1.0 / (1.0 + jp * jp);
  };
  std::vector<double> lambdas(jmax);
  for (std::size_t j = 1; j <= jmax; ++j) lambdas[j - 1] = rule(j);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return SpectralDecomposition(std::move(lambdas), rule, EigenvalueGrowth{1.0 + pi2, 2.0});
}

CoefficientVector::CoefficientVector(std::vector<double> values) : values_(std::move(values)) {}

CoefficientVector::CoefficientVector(std::function<double(std::size_t)> generator,
                                     CoefficientDecay decay)
    : generator_(std::move(generator)), decay_(decay) {
  if (!generator_) throw std::invalid_argument("coefficient generator is empty");
  if (!(decay.constant >= 0.0)) throw std::invalid_argument("decay constant must be >= 0");
}

CoefficientVector CoefficientVector::unit(std::size_t j) {
  if (j == 0) throw std::out_of_range("coefficient indices start at 1");
  std::vector<double> v(j, 0.0);
  v[j - 1] = 1.0;
  return CoefficientVector(std::move(v));
}

double CoefficientVector::operator[](std::size_t j) const {
  if (j == 0) throw std::out_of_range("coefficient indices start at 1");
  if (generator_) return generator_(j);
  return j <= values_.size() ? values_[j - 1] : 0.0;
}

double spectral_interp_norm(const SpectralDecomposition& dec, const CoefficientVector& coef,
                            double s, const SeriesOptions& opts) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("spectral interpolation index s must lie in [0, 1]");
  }
  SeriesTerms series;
  series.term = [&](std::size_t j) {
    const double a = coef[j];
    if (a == 0.0) return 0.0;
    return std::pow(1.0 / dec.lambda(j), s) * a * a;
  };

  if (coef.finite()) {
    const std::size_t n_support = coef.support();
    if (n_support > dec.stored() && !dec.extendable()) {
      throw std::invalid_argument("coefficient support exceeds the available eigenvalues");
    }
    series.tail_bound = [n_support](std::size_t n) {
      return n >= n_support ? 0.0 : std::numeric_limits<double>::max();
    };
  } else {
    if (!dec.growth() || !dec.extendable()) {
      throw std::invalid_argument(
          "infinite coefficient sequences need an extendable decomposition with a growth bound");
    }
    // sum_{j>n} lambda_j^{-s} a_j^2 <= C^2 G^s sum_{j>n} j^{gamma s - 2p}
    //                               <= C^2 G^s n^{1 - r} / (r - 1),  r = 2p - gamma s.
    const EigenvalueGrowth g = *dec.growth();
    const CoefficientDecay d = *coef.decay();
    const double r = 2.0 * d.power - g.exponent * s;
    if (!(r > 1.0)) {
      throw NumericError("divergent tail bound: coefficient decay too slow for this s");
    }
    const double scale = d.constant * d.constant * std::pow(g.constant, s) / (r - 1.0);
    series.tail_bound = [scale, r](std::size_t n) {
      return scale * std::pow(static_cast<double>(n), 1.0 - r);
    };
  }
  return std::sqrt(sum_series(series, opts).value);
}

CoefficientVector sine_coefficients(const std::function<double(double)>& f, std::size_t jmax,
                                    const QuadratureOptions& opts) {
  if (jmax == 0) throw std::invalid_argument("jmax must be at least 1");
  std::vector<double> a(jmax);
  CompensatedSum energy;
  for (std::size_t j = 1; j <= jmax; ++j) {
    const double jp = static_cast<double>(j) * std::numbers::pi;
    Integrand g([&f, jp](double x) { return f(x) * std::numbers::sqrt2 * std::sin(jp * x); });
    for (std::size_t k = 1; k < j; ++k) {
      g.breakpoints.push_back(static_cast<double>(k) / static_cast<double>(j));
    }
    a[j - 1] = integrate_finite(g, 0.0, 1.0, opts).value;
    energy.add(a[j - 1] * a[j - 1]);
  }
  const double l2 =
      integrate_finite([&f](double x) { return f(x) * f(x); }, 0.0, 1.0, opts).value;
  if (energy.value() > l2 * (1.0 + 1e-8) + 1e-14) {
    std::ostringstream msg;
    msg << "Parseval check failed: sum a_j^2 = " << energy.value() << " exceeds ||f||^2 = " << l2;
    throw NumericError(msg.str());
  }
  return CoefficientVector(std::move(a));
}

WeightedSpacePair as_weighted_pair(const SpectralDecomposition& dec, std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one eigenvalue");
  std::vector<Atom> atoms;
  atoms.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) atoms.push_back({1.0, 1.0, 1.0 / dec.lambda(j)});
  return WeightedSpacePair(std::move(atoms));
}

}  // namespace hinterp

#include "hinterp_tools/random_cases.hpp"

#include <cmath>

namespace hinterp::tools {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

WeightedSpacePair random_space(Rng& rng, std::size_t atoms) {
  std::vector<Atom> out(atoms);
  for (Atom& a : out) {
    a.mu = uniform(rng, 0.1, 2.0);
    a.w0 = std::pow(10.0, uniform(rng, -2.0, 2.0));
    a.w1 = std::pow(10.0, uniform(rng, -2.0, 2.0));
  }
  return WeightedSpacePair(std::move(out));
}

Element random_element(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Element v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

CoupleOperator random_operator(Rng& rng, std::size_t rows, std::size_t cols) {
  return CoupleOperator(rows, cols, random_element(rng, rows * cols));
}

}  // namespace hinterp::tools

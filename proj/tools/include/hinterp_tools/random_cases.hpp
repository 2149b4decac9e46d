#pragma once

#include <cstddef>
#include <random>

#include "hinterp/weighted_l2.hpp"

namespace hinterp::tools {

using Rng = std::mt19937_64;

/// mu uniform in [0.1, 2]; w0, w1 log-uniform in [1e-2, 1e2].
WeightedSpacePair random_space(Rng& rng, std::size_t atoms);

/// Standard normal entries.
Element random_element(Rng& rng, std::size_t n);

/// Standard normal entries, row-major.
CoupleOperator random_operator(Rng& rng, std::size_t rows, std::size_t cols);

double uniform(Rng& rng, double lo, double hi);

}  // namespace hinterp::tools

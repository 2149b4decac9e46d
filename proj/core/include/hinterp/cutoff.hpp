#pragma once

#include <functional>

#include "hinterp/quadrature.hpp"

namespace hinterp {

/// An even cutoff profile chi with chi = 1 on |t| <= 1/2 and chi = 0 on
/// |t| >= 1, given with its first two derivatives.
struct CutoffProfile {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/// The C-infinity step chi(t) = S(2 - 2|t|) on 1/2 < |t| < 1, where
/// S(x) = f(x) / (f(x) + f(1 - x)) and f(y) = exp(-1/y) for y > 0.
CutoffProfile default_cutoff();

/// E_k = int_R |chi^(k)|^2 for k = 0, 1, 2.
double cutoff_energy(const CutoffProfile& chi, int k,
                     const QuadratureOptions& opts = {.rel_tol = 1e-13});

}  // namespace hinterp

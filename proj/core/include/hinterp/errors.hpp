#pragma once

#include <stdexcept>
#include <string>

namespace hinterp {

/// Raised when an iterative numerical procedure (adaptive quadrature, series
/// summation, power iteration) exhausts its budget or cannot certify its
/// tolerance. Invalid arguments are reported with std::invalid_argument.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hinterp

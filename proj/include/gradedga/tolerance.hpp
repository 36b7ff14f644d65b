#pragma once

#include <cmath>
#include <complex>

#include "gradedga/error.hpp"

namespace gradedga {

/// Comparison thresholds. A quantity v is treated as zero against a reference
/// magnitude `scale` when |v| <= eps_abs + eps_rel * scale.
struct Tolerance {
  double eps_abs = 1e-12;
  double eps_rel = 1e-10;

  constexpr Tolerance() = default;
  Tolerance(double abs, double rel) : eps_abs(abs), eps_rel(rel) {
    if (!(abs > 0.0) || !(rel > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
    }
  }

  double threshold(double scale) const noexcept { return eps_abs + eps_rel * scale; }
  bool is_zero(double magnitude, double scale = 0.0) const noexcept {
    return magnitude <= threshold(scale);
  }
  bool is_zero(std::complex<double> value, double scale = 0.0) const noexcept {
    return is_zero(std::abs(value), scale);
  }
};

}  // namespace gradedga

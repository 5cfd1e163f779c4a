#pragma once

#include <string>
#include <vector>

#include "cnsgt/awh/spectral_window.hpp"
#include "cnsgt/awh/warp.hpp"

namespace cnsgt::awh {

struct GrowthRow {
  double truncation = 0.0;
  double integral = 0.0;
  /// I(R_k) - I(R_{k-1}) and that increment per unit of log R; 0 on the first row.
  double increment = 0.0;
  double log_slope = 0.0;
};

struct GrowthStudy {
  std::vector<GrowthRow> rows;
  /// (max - min) / max of the log slopes.
  double slope_spread = 0.0;
  /// Relative size of the last increment, increment / I.
  double last_relative_increment = 0.0;
  /// "unbounded growth", "converges" or "inconclusive". A trend, not a proof.
  std::string verdict;
};

inline constexpr double kLogTrendTolerance = 0.2;
inline constexpr double kPlateauTolerance = 1e-3;

/// I(R) = int_{|omega| <= R} int |f^(xi)|^2 |psi^(beta(omega)(xi - eta(omega)))|^2
///        |beta(omega)|^s dxi domega
/// for increasing truncations R. f^ must have bounded support.
/// Throws Error(invalid_spec) on bad truncations and Error(numeric) when a
/// quadrature does not reach its tolerance.
GrowthStudy norm_growth_study(const SpectralWindow& f_hat, const SpectralWindow& psi_hat, const WarpSpec& warp,
                              const std::vector<double>& truncations);

}  // namespace cnsgt::awh

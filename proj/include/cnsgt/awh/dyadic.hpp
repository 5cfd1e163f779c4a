#pragma once

#include <vector>

#include "cnsgt/awh/spectral_window.hpp"
#include "cnsgt/awh/warp.hpp"

namespace cnsgt::awh {

/// Scale range treated as j in Z: beyond it every term is below double
/// resolution for windows with the admissibility decay.
inline constexpr int kFullScaleRange = 64;

/// sum_{j = j_min}^{j_max} |psi^(2^j xi)|^2.
double dyadic_symbol(const SpectralWindow& psi, double xi, int j_min = -kFullScaleRange, int j_max = kFullScaleRange);

struct DyadicConditions {
  /// (i): sup over xi0 in the grid of inf_{a in [1,2]} |psi^(a xi0)|.
  bool lower_holds = false;
  double lower_xi0 = 0.0;
  double lower_inf = 0.0;
  /// (ii): smallest C with |psi^|^2 <= C |xi| / (1 + |xi|)^2 over the grid and
  /// the probes +-2^k, |k| <= 20; holds when the ratio does not grow toward
  /// the outermost probes.
  bool envelope_holds = false;
  double envelope_constant = 0.0;
  /// Extremes of the full-range symbol over the nonzero grid points.
  double symbol_min = 0.0;
  double symbol_max = 0.0;
};

DyadicConditions dyadic_conditions(const SpectralWindow& psi, const FrequencyGrid& grid);

struct DyadicSymbol {
  double value = 0.0;
  /// Bound on the omitted terms j < j_min and j > j_max; +inf when (ii) fails.
  double tail_bound = 0.0;
  DyadicConditions conditions;
};

/// Throws Error(singular_point) for xi = 0.
DyadicSymbol dyadic_wavelet_symbol(const SpectralWindow& psi, double xi, int j_min, int j_max,
                                   const FrequencyGrid& grid);

struct DualWavelet {
  std::vector<double> xi;      // grid points with xi != 0
  std::vector<Complex> dual;   // psi~^(xi) = psi^(xi) / m(xi)
  std::vector<Complex> cross;  // sum_j conj(psi^(2^j xi)) psi~^(2^j xi)
  double max_cross_error = 0.0;
};

/// Throws NotInvertibleError(not_a_frame) when min m <= rel_tol * max m on the grid.
DualWavelet canonical_dual_wavelet(const SpectralWindow& psi, const FrequencyGrid& grid, double rel_tol = 1e-12);

}  // namespace cnsgt::awh

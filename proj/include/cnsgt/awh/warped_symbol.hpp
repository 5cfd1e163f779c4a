#pragma once

#include <vector>

#include "cnsgt/awh/spectral_window.hpp"
#include "cnsgt/awh/warp.hpp"

namespace cnsgt::awh {

struct SymbolSamples {
  std::vector<double> xi;
  std::vector<Complex> values;
  /// |m_h - m_2h| per point: the change when the node spacing is doubled.
  std::vector<double> convergence;

  double max_convergence() const;
  double min_abs() const;
  double max_abs() const;
};

/// m(xi) = int conj(psi^(beta (xi - eta))) phi^(beta (xi - eta)) |beta|^s domega
/// over the warp section, by the rule in `quad`.
SymbolSamples warped_symbol(const SpectralWindow& psi, const SpectralWindow& phi, const WarpSpec& warp,
                            const FrequencyGrid& grid, const QuadratureSpec& quad = {});

SymbolSamples warped_symbol(const SpectralWindow& psi, const SpectralWindow& phi, const WarpSpec& warp,
                            const std::vector<double>& xi, const QuadratureSpec& quad = {});

/// Quadrature nodes on the omega line with their weights (excluded nodes
/// already removed). Exposed for the norm study and for tests.
struct OmegaNodes {
  std::vector<double> omega;
  std::vector<double> weight;
};

OmegaNodes omega_nodes(const QuadratureSpec& quad, const std::vector<double>& excluded_points, bool coarse);

}  // namespace cnsgt::awh

#pragma once

#include <vector>

#include "cnsgt/awh/spectral_window.hpp"

namespace cnsgt::awh {

/// Exact symbol of the composite warp at s = 1 for piecewise polynomial
/// windows supported in [-1, 1]:
///   m(xi) = int_{-1}^{c} r(z)/(1+z) dz + int_{c}^{1} r(z)/(1-z) dz,
/// with r = conj(psi^) phi^ and c = xi clipped to [-1, 1].
/// Throws Error(form) for other window forms, Error(domain) when a support
/// leaves [-1, 1] and Error(numeric) when a log term diverges.
Complex composite_closed_form(const SpectralWindow& psi, const SpectralWindow& phi, double xi);

/// The same integral for arbitrary windows supported in [-1, 1], by adaptive
/// Gauss-Kronrod quadrature split at the window breakpoints.
Complex composite_symbol_integral(const SpectralWindow& psi, const SpectralWindow& phi, double xi);

struct DerivativeRow {
  double xi = 0.0;
  Complex finite_difference;
  Complex formula;
  double error = 0.0;  // |fd - formula| / max(1, |formula|)
};

struct DerivativeReport {
  std::vector<DerivativeRow> rows;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

/// Compares central differences of the composite symbol with
/// m'(xi) = -(2 xi / (1 - xi^2)) conj(psi^(xi)) phi^(xi).
/// Samples with |xi| > 1 - edge_margin throw Error(domain).
DerivativeReport derivative_identity_check(const SpectralWindow& psi, const SpectralWindow& phi,
                                           const std::vector<double>& xi_samples, double tolerance = 1e-6,
                                           double step = 1e-4, double edge_margin = 1e-3);

}  // namespace cnsgt::awh

#pragma once

#include <complex>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

namespace cnsgt::awh {

using Complex = std::complex<double>;

/// Polynomial sum_k coeffs[k] z^k on the half-open interval [lo, hi).
struct PolynomialPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Complex> coeffs;
};

struct PiecewisePolynomial {
  std::vector<PolynomialPiece> pieces;
};

/// amplitude * poly(xi - center) * exp(-(xi - center)^2 / (2 width^2)),
/// zero outside [support_lo, support_hi).
struct Gaussian {
  double center = 0.0;
  double width = 1.0;
  Complex amplitude = 1.0;
  std::vector<Complex> poly{1.0};
  double support_lo = -std::numeric_limits<double>::infinity();
  double support_hi = std::numeric_limits<double>::infinity();
};

/// Linear interpolation between samples on an increasing grid; zero outside.
struct Sampled {
  std::vector<double> grid;
  std::vector<Complex> values;
};

/// A window given on the frequency side, psi^(xi) for xi on the real line.
class SpectralWindow {
 public:
  using Form = std::variant<PiecewisePolynomial, Gaussian, Sampled>;

  /// Validates the form (ordered, disjoint pieces; positive width; matching
  /// sample lengths). Throws Error(form) otherwise.
  explicit SpectralWindow(Form form);

  Complex operator()(double xi) const;

  const Form& form() const noexcept { return form_; }
  bool is_piecewise_polynomial() const noexcept { return std::holds_alternative<PiecewisePolynomial>(form_); }

  /// Closure of the region where the window can be nonzero.
  std::pair<double, double> support() const;
  /// Points where the window may fail to be smooth, sorted.
  std::vector<double> breakpoints() const;

  SpectralWindow scaled(Complex c) const;

  static SpectralWindow polynomial(double lo, double hi, std::vector<Complex> coeffs);
  static SpectralWindow indicator(double lo, double hi);
  /// L2-normalized Gaussian of standard width `width` (|psi^|^2 has unit integral).
  static SpectralWindow unit_gaussian(double center, double width);

 private:
  Form form_;
};

/// psi^(z) = (1 - z) chi_[-1,1](z), phi^(z) = (1 + z) chi_[-1,1](z).
std::pair<SpectralWindow, SpectralWindow> composite_pair();

}  // namespace cnsgt::awh

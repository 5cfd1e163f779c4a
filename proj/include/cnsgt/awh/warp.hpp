#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cnsgt::awh {

/// A section (x, eta(omega), beta(omega)) of the affine Weyl-Heisenberg group
/// with measure |beta(omega)|^(s-1) dx domega (d = n = 1). The atom at
/// (x, omega) has spectrum psi^(beta(omega) (xi - eta(omega))) up to phase.
struct WarpSpec {
  std::string name;
  std::function<double(double)> beta;
  std::function<double(double)> eta;
  double s = 1.0;
  /// Isolated zeros of beta; quadrature nodes near them are excluded.
  std::vector<double> beta_zeros;

  /// beta(omega) = omega, eta = 0.
  static WarpSpec wavelet(double s = -1.0);
  /// beta(omega) = 1 / (1 + |omega|), eta(omega) = omega.
  static WarpSpec composite(double s = 1.0);
  /// beta = 1, eta(omega) = omega.
  static WarpSpec stft(double s = 0.0);
  /// beta(omega) = omega, eta(omega) = lambda (1/omega - 1).
  static WarpSpec torresani(double lambda, double s = -1.0);
};

enum class QuadratureRule { trapezoid, midpoint };

/// truncated: uniform nodes on [omega_min, omega_max].
/// whole_line: uniform nodes in t on (-1, 1) with omega = scale t / (1 - t^2);
/// the trapezoid end samples are linearly extrapolated from the interior.
enum class QuadratureDomain { truncated, whole_line };

struct QuadratureSpec {
  double omega_min = -1e3;
  double omega_max = 1e3;
  std::size_t n_nodes = 100000;
  QuadratureRule rule = QuadratureRule::trapezoid;
  double singularity_exclusion_radius = 1e-6;
  QuadratureDomain domain = QuadratureDomain::truncated;
  double scale = 10.0;

  /// Throws Error(invalid_spec).
  void validate() const;
};

struct FrequencyGrid {
  double xi_min = -1.0;
  double xi_max = 1.0;
  std::size_t n_points = 2;

  void validate() const;
  double spacing() const { return (xi_max - xi_min) / static_cast<double>(n_points - 1); }
  double at(std::size_t i) const;
  std::vector<double> points() const;
};

}  // namespace cnsgt::awh

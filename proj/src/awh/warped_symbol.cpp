#include "cnsgt/awh/warped_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

double SymbolSamples::max_convergence() const {
  double m = 0.0;
  for (double c : convergence) m = std::max(m, c);
  return m;
}

double SymbolSamples::min_abs() const {
  double m = std::abs(values.front());
  for (const auto& v : values) m = std::min(m, std::abs(v));
  return m;
}

double SymbolSamples::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// Number of intervals (trapezoid) or cells (midpoint) at the fine level,
// even so that the coarse level is exactly half.
std::size_t fine_intervals(const QuadratureSpec& q) {
  std::size_t n = q.rule == QuadratureRule::trapezoid ? q.n_nodes - 1 : q.n_nodes;
  return n + (n % 2);
}

}  // namespace

OmegaNodes omega_nodes(const QuadratureSpec& quad, const std::vector<double>& excluded_points, bool coarse) {
  quad.validate();
  const std::size_t cells = fine_intervals(quad) / (coarse ? 2 : 1);
  const bool whole = quad.domain == QuadratureDomain::whole_line;
  const double a = whole ? -1.0 : quad.omega_min;
  const double b = whole ? 1.0 : quad.omega_max;
  const double h = (b - a) / static_cast<double>(cells);

  std::vector<double> t;
  std::vector<double> w;
  if (quad.rule == QuadratureRule::trapezoid) {
    for (std::size_t k = 0; k <= cells; ++k) {
      t.push_back(k == cells ? b : a + static_cast<double>(k) * h);
      w.push_back((k == 0 || k == cells) ? 0.5 * h : h);
    }
    if (whole) {
      // f(-1) ~ 2 f(t1) - f(t2), likewise at +1; the end nodes themselves drop out.
      w[1] += h;
      w[2] -= 0.5 * h;
      w[cells - 1] += h;
      w[cells - 2] -= 0.5 * h;
      t = std::vector<double>(t.begin() + 1, t.end() - 1);
      w = std::vector<double>(w.begin() + 1, w.end() - 1);
    }
  } else {
    for (std::size_t k = 0; k < cells; ++k) {
      t.push_back(a + (static_cast<double>(k) + 0.5) * h);
      w.push_back(h);
    }
  }

  OmegaNodes out;
  out.omega.reserve(t.size());
  out.weight.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    double omega = t[k];
    double weight = w[k];
    if (whole) {
      const double d = 1.0 - t[k] * t[k];
      omega = quad.scale * t[k] / d;
      weight *= quad.scale * (1.0 + t[k] * t[k]) / (d * d);
    }
    const bool excluded = std::any_of(excluded_points.begin(), excluded_points.end(), [&](double z) {
      return std::abs(omega - z) < quad.singularity_exclusion_radius || omega == z;
    });
    if (excluded) continue;
    out.omega.push_back(omega);
    out.weight.push_back(weight);
  }
  return out;
}

namespace {

struct Prepared {
  std::vector<double> beta;
  std::vector<double> eta;
  std::vector<double> weight;  // quadrature weight * |beta|^s
};

Prepared prepare(const WarpSpec& warp, const OmegaNodes& nodes) {
  Prepared p;
  const std::size_t n = nodes.omega.size();
  p.beta.resize(n);
  p.eta.resize(n);
  p.weight.resize(n);
  bool any_nonzero = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = nodes.omega[k];
    p.beta[k] = warp.beta(w);
    p.eta[k] = warp.eta(w);
    if (p.beta[k] != 0.0) any_nonzero = true;
    p.weight[k] = nodes.weight[k] * std::pow(std::abs(p.beta[k]), warp.s);
    if (!std::isfinite(p.weight[k]) || !std::isfinite(p.eta[k]) || !std::isfinite(p.beta[k])) {
      throw Error(Errc::numeric, "warp '" + warp.name + "' is singular at omega = " + std::to_string(w) +
                                     "; list the point in beta_zeros or widen the exclusion radius");
    }
  }
  if (!any_nonzero) throw Error(Errc::invalid_warp, "beta vanishes at every quadrature node of warp '" + warp.name + "'");
  return p;
}

Complex integrate(const SpectralWindow& psi, const SpectralWindow& phi, const Prepared& p, double xi) {
  Complex acc{};
  for (std::size_t k = 0; k < p.weight.size(); ++k) {
    if (p.weight[k] == 0.0) continue;
    const double z = p.beta[k] * (xi - p.eta[k]);
    const Complex a = psi(z);
    if (a == Complex{}) continue;
    acc += std::conj(a) * phi(z) * p.weight[k];
  }
  return acc;
}

}  // namespace

SymbolSamples warped_symbol(const SpectralWindow& psi, const SpectralWindow& phi, const WarpSpec& warp,
                            const std::vector<double>& xi, const QuadratureSpec& quad) {
  if (!warp.beta || !warp.eta) throw Error(Errc::invalid_warp, "warp has no beta/eta");
  const Prepared fine = prepare(warp, omega_nodes(quad, warp.beta_zeros, false));
  const Prepared coarse = prepare(warp, omega_nodes(quad, warp.beta_zeros, true));
  SymbolSamples out;
  out.xi = xi;
  out.values.reserve(xi.size());
  out.convergence.reserve(xi.size());
  for (double x : xi) {
    const Complex m = integrate(psi, phi, fine, x);
    const Complex mc = integrate(psi, phi, coarse, x);
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
      throw Error(Errc::numeric, "symbol is not finite at xi = " + std::to_string(x));
    }
    out.values.push_back(m);
    out.convergence.push_back(std::abs(m - mc));
  }
  return out;
}

SymbolSamples warped_symbol(const SpectralWindow& psi, const SpectralWindow& phi, const WarpSpec& warp,
                            const FrequencyGrid& grid, const QuadratureSpec& quad) {
  grid.validate();
  return warped_symbol(psi, phi, warp, grid.points(), quad);
}

}  // namespace cnsgt::awh

#include "cnsgt/awh/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

namespace {

constexpr int kProbeExponent = 20;
constexpr int kOuterProbes = 5;
constexpr std::size_t kScaleSamples = 257;

double envelope_ratio(const SpectralWindow& psi, double xi) {
  if (xi == 0.0) return 0.0;
  const double a = std::abs(xi);
  return std::norm(psi(xi)) * (1.0 + a) * (1.0 + a) / a;
}

}  // namespace

double dyadic_symbol(const SpectralWindow& psi, double xi, int j_min, int j_max) {
  double m = 0.0;
  for (int j = j_min; j <= j_max; ++j) m += std::norm(psi(std::ldexp(xi, j)));
  return m;
}

DyadicConditions dyadic_conditions(const SpectralWindow& psi, const FrequencyGrid& grid) {
  grid.validate();
  DyadicConditions c;
  c.symbol_min = std::numeric_limits<double>::infinity();
  for (double x0 : grid.points()) {
    if (x0 == 0.0) continue;
    double inf = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kScaleSamples; ++k) {
      const double a = 1.0 + static_cast<double>(k) / static_cast<double>(kScaleSamples - 1);
      inf = std::min(inf, std::abs(psi(a * x0)));
    }
    if (inf > c.lower_inf) {
      c.lower_inf = inf;
      c.lower_xi0 = x0;
    }
    const double m = dyadic_symbol(psi, x0);
    c.symbol_min = std::min(c.symbol_min, m);
    c.symbol_max = std::max(c.symbol_max, m);
    c.envelope_constant = std::max(c.envelope_constant, envelope_ratio(psi, x0));
  }
  c.lower_holds = c.lower_inf > 0.0;

  double inner = c.envelope_constant;
  double outer = 0.0;
  for (int k = -kProbeExponent; k <= kProbeExponent; ++k) {
    for (double sign : {-1.0, 1.0}) {
      const double r = envelope_ratio(psi, sign * std::ldexp(1.0, k));
      if (std::abs(k) > kProbeExponent - kOuterProbes) {
        outer = std::max(outer, r);
      } else {
        inner = std::max(inner, r);
      }
    }
  }
  c.envelope_constant = std::max(inner, outer);
  c.envelope_holds = std::isfinite(c.envelope_constant) && outer <= inner;
  if (!std::isfinite(c.symbol_min)) c.symbol_min = 0.0;
  return c;
}

DyadicSymbol dyadic_wavelet_symbol(const SpectralWindow& psi, double xi, int j_min, int j_max,
                                   const FrequencyGrid& grid) {
  if (xi == 0.0) throw Error(Errc::singular_point, "the dyadic symbol is not defined at xi = 0");
  if (j_min > j_max) throw Error(Errc::invalid_spec, "scale range needs j_min <= j_max");
  DyadicSymbol out;
  out.value = dyadic_symbol(psi, xi, j_min, j_max);
  out.conditions = dyadic_conditions(psi, grid);
  if (out.conditions.envelope_holds) {
    const double a = std::abs(xi);
    out.tail_bound = out.conditions.envelope_constant * (std::ldexp(a, j_min) + 1.0 / std::ldexp(a, j_max));
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

DualWavelet canonical_dual_wavelet(const SpectralWindow& psi, const FrequencyGrid& grid, double rel_tol) {
  grid.validate();
  DualWavelet out;
  std::vector<double> m;
  for (double x : grid.points()) {
    if (x == 0.0) continue;
    out.xi.push_back(x);
    m.push_back(dyadic_symbol(psi, x));
  }
  if (m.empty()) throw Error(Errc::invalid_spec, "grid has no nonzero frequency");
  const auto [lo, hi] = std::minmax_element(m.begin(), m.end());
  if (!(*lo > rel_tol * *hi)) throw NotInvertibleError(Errc::not_a_frame, *lo, *hi, rel_tol);

  auto dual_at = [&](double z) { return psi(z) / dyadic_symbol(psi, z); };
  for (std::size_t k = 0; k < out.xi.size(); ++k) {
    const double x = out.xi[k];
    out.dual.push_back(psi(x) / m[k]);
    Complex cross{};
    for (int j = -kFullScaleRange; j <= kFullScaleRange; ++j) {
      const double z = std::ldexp(x, j);
      const Complex p = psi(z);
      if (p == Complex{}) continue;
      cross += std::conj(p) * dual_at(z);
    }
    out.cross.push_back(cross);
    out.max_cross_error = std::max(out.max_cross_error, std::abs(cross - 1.0));
  }
  return out;
}

}  // namespace cnsgt::awh

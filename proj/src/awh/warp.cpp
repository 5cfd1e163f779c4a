#include "cnsgt/awh/warp.hpp"

#include <cmath>
#include <string>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

WarpSpec WarpSpec::wavelet(double s) {
  return {"wavelet", [](double w) { return w; }, [](double) { return 0.0; }, s, {0.0}};
}

WarpSpec WarpSpec::composite(double s) {
  return {"composite", [](double w) { return 1.0 / (1.0 + std::abs(w)); }, [](double w) { return w; }, s, {}};
}

WarpSpec WarpSpec::stft(double s) {
  return {"stft", [](double) { return 1.0; }, [](double w) { return w; }, s, {}};
}

WarpSpec WarpSpec::torresani(double lambda, double s) {
  return {"torresani", [](double w) { return w; }, [lambda](double w) { return lambda * (1.0 / w - 1.0); }, s, {0.0}};
}

void QuadratureSpec::validate() const {
  if (n_nodes < 16) throw Error(Errc::invalid_spec, "quadrature needs at least 16 nodes");
  if (!(singularity_exclusion_radius >= 0.0)) throw Error(Errc::invalid_spec, "exclusion radius must be >= 0");
  if (domain == QuadratureDomain::truncated && !(omega_min < omega_max)) {
    throw Error(Errc::invalid_spec, "truncation needs omega_min < omega_max");
  }
  if (domain == QuadratureDomain::whole_line && !(scale > 0.0)) {
    throw Error(Errc::invalid_spec, "whole-line map needs scale > 0");
  }
}

void FrequencyGrid::validate() const {
  if (!(xi_min < xi_max)) throw Error(Errc::invalid_spec, "frequency grid needs xi_min < xi_max");
  if (n_points < 2) throw Error(Errc::invalid_spec, "frequency grid needs at least 2 points");
}

double FrequencyGrid::at(std::size_t i) const {
  if (i + 1 == n_points) return xi_max;
  return xi_min + static_cast<double>(i) * spacing();
}

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> out(n_points);
  for (std::size_t i = 0; i < n_points; ++i) out[i] = at(i);
  return out;
}

}  // namespace cnsgt::awh

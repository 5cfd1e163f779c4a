#pragma once

// JSON and CSV forms of the real-line objects.
//
//   Window     {"form":"polynomial","pieces":[{"lo":a,"hi":b,"coeffs":[c0,c1,...]}]}
//              {"form":"gaussian","center":c,"width":w,"normalized":true|false,
//               "amplitude":a,"poly":[...],"support":[lo,hi]}
//              {"form":"sampled","grid":[...],"values":[...]}
//              {"builtin":"composite_psi"|"composite_phi"|"indicator","lo":a,"hi":b}
//              Complex coefficients are numbers or [re, im] pairs.
//   Warp       {"builtin":"wavelet"|"composite"|"stft"|"torresani","s":s,"lambda":l}
//   Grid       {"xi_min":a,"xi_max":b,"n_points":n}
//   Quadrature {"omega_min":..,"omega_max":..,"n_nodes":..,"rule":"trapezoid"|"midpoint",
//               "singularity_exclusion_radius":..,"domain":"truncated"|"whole_line","scale":..}
//   Symbol CSV xi,re,im,abs

#include <string>

#include <json.hpp>

#include "cnsgt/awh/composite.hpp"
#include "cnsgt/awh/divergence.hpp"
#include "cnsgt/awh/dyadic.hpp"
#include "cnsgt/awh/spectral_window.hpp"
#include "cnsgt/awh/warp.hpp"
#include "cnsgt/awh/warped_symbol.hpp"

namespace cnsgt::io {

using Json = nlohmann::json;

awh::SpectralWindow window_from_json(const Json& j, const std::string& where = "window");
awh::WarpSpec warp_from_json(const Json& j, const std::string& where = "warp");
awh::FrequencyGrid grid_from_json(const Json& j, const std::string& where = "grid");
/// Missing fields keep their defaults.
awh::QuadratureSpec quadrature_from_json(const Json& j, const std::string& where = "quadrature");

std::string to_csv(const awh::SymbolSamples& m);
/// Bounds, ratio and convergence estimate of a sampled symbol.
Json to_json(const awh::SymbolSamples& m);
Json to_json(const awh::DyadicConditions& c);
Json to_json(const awh::DerivativeReport& r);
Json to_json(const awh::GrowthStudy& g);

}  // namespace cnsgt::io

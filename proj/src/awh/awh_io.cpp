#include "cnsgt/awh/awh_io.hpp"

#include <cmath>
#include <numbers>

#include "cnsgt/error.hpp"
#include "cnsgt/serialization.hpp"
#include "../json_detail.hpp"

namespace cnsgt::io {

namespace {

using awh::Complex;
using detail::fail;
using detail::field;
using detail::number;
using detail::numbers;

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where, "expected a number or an [re, im] pair");
}

std::vector<Complex> complexes(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

double optional_number(const Json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  return number(j.at(key), where + "/" + key);
}

awh::SpectralWindow builtin_window(const Json& j, const std::string& where) {
  const Json& name = field(j, "builtin", where);
  if (name == "composite_psi") return awh::composite_pair().first;
  if (name == "composite_phi") return awh::composite_pair().second;
  if (name == "indicator") {
    return awh::SpectralWindow::indicator(number(field(j, "lo", where), where + "/lo"),
                                          number(field(j, "hi", where), where + "/hi"));
  }
  fail(where + "/builtin", "unknown builtin window");
}

awh::SpectralWindow::Form form_from_json(const Json& j, const std::string& where) {
  const Json& form = field(j, "form", where);
  if (form == "polynomial") {
    const Json& pieces = field(j, "pieces", where);
    if (!pieces.is_array()) fail(where + "/pieces", "expected an array");
    awh::PiecewisePolynomial p;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string at = where + "/pieces/" + std::to_string(i);
      p.pieces.push_back({number(field(pieces[i], "lo", at), at + "/lo"), number(field(pieces[i], "hi", at), at + "/hi"),
                          complexes(field(pieces[i], "coeffs", at), at + "/coeffs")});
      if (p.pieces.back().coeffs.empty()) fail(at + "/coeffs", "needs at least one coefficient");
    }
    return p;
  }
  if (form == "gaussian") {
    awh::Gaussian g;
    g.center = optional_number(j, "center", 0.0, where);
    g.width = optional_number(j, "width", 1.0, where);
    if (j.value("normalized", false) && g.width > 0.0) {
      g.amplitude = 1.0 / std::sqrt(g.width * std::sqrt(std::numbers::pi));
    }
    if (j.contains("amplitude")) g.amplitude = complex_from_json(j.at("amplitude"), where + "/amplitude");
    if (j.contains("poly")) g.poly = complexes(j.at("poly"), where + "/poly");
    if (j.contains("support")) {
      const auto s = numbers(j.at("support"), where + "/support");
      if (s.size() != 2) fail(where + "/support", "expected [lo, hi]");
      g.support_lo = s[0];
      g.support_hi = s[1];
    }
    return g;
  }
  if (form == "sampled") {
    return awh::Sampled{numbers(field(j, "grid", where), where + "/grid"),
                        complexes(field(j, "values", where), where + "/values")};
  }
  fail(where + "/form", "form must be \"polynomial\", \"gaussian\" or \"sampled\"");
}

}  // namespace

awh::SpectralWindow window_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("builtin")) return builtin_window(j, where);
  auto form = form_from_json(j, where);
  try {
    return awh::SpectralWindow(std::move(form));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

awh::WarpSpec warp_from_json(const Json& j, const std::string& where) {
  const Json& name = field(j, "builtin", where);
  const bool has_s = j.contains("s");
  const double s = has_s ? number(j.at("s"), where + "/s") : 0.0;
  if (name == "wavelet") return has_s ? awh::WarpSpec::wavelet(s) : awh::WarpSpec::wavelet();
  if (name == "composite") return has_s ? awh::WarpSpec::composite(s) : awh::WarpSpec::composite();
  if (name == "stft") return has_s ? awh::WarpSpec::stft(s) : awh::WarpSpec::stft();
  if (name == "torresani") {
    const double lambda = number(field(j, "lambda", where), where + "/lambda");
    return has_s ? awh::WarpSpec::torresani(lambda, s) : awh::WarpSpec::torresani(lambda);
  }
  fail(where + "/builtin", "warp must be \"wavelet\", \"composite\", \"stft\" or \"torresani\"");
}

awh::FrequencyGrid grid_from_json(const Json& j, const std::string& where) {
  const Json& n = field(j, "n_points", where);
  if (!n.is_number_integer() || n.get<long long>() < 2) fail(where + "/n_points", "expected an integer >= 2");
  awh::FrequencyGrid g{number(field(j, "xi_min", where), where + "/xi_min"),
                       number(field(j, "xi_max", where), where + "/xi_max"), n.get<std::size_t>()};
  if (!(g.xi_min < g.xi_max)) fail(where, "xi_min must be below xi_max");
  return g;
}

awh::QuadratureSpec quadrature_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  awh::QuadratureSpec q;
  q.omega_min = optional_number(j, "omega_min", q.omega_min, where);
  q.omega_max = optional_number(j, "omega_max", q.omega_max, where);
  if (j.contains("n_nodes")) {
    const Json& n = j.at("n_nodes");
    if (!n.is_number_integer() || n.get<long long>() < 16) fail(where + "/n_nodes", "expected an integer >= 16");
    q.n_nodes = n.get<std::size_t>();
  }
  if (j.contains("rule")) {
    if (j.at("rule") == "trapezoid") {
      q.rule = awh::QuadratureRule::trapezoid;
    } else if (j.at("rule") == "midpoint") {
      q.rule = awh::QuadratureRule::midpoint;
    } else {
      fail(where + "/rule", "rule must be \"trapezoid\" or \"midpoint\"");
    }
  }
  q.singularity_exclusion_radius =
      optional_number(j, "singularity_exclusion_radius", q.singularity_exclusion_radius, where);
  if (j.contains("domain")) {
    if (j.at("domain") == "truncated") {
      q.domain = awh::QuadratureDomain::truncated;
    } else if (j.at("domain") == "whole_line") {
      q.domain = awh::QuadratureDomain::whole_line;
    } else {
      fail(where + "/domain", "domain must be \"truncated\" or \"whole_line\"");
    }
  }
  q.scale = optional_number(j, "scale", q.scale, where);
  try {
    q.validate();
  } catch (const Error& e) {
    fail(where, e.what());
  }
  return q;
}

std::string to_csv(const awh::SymbolSamples& m) {
  std::string out = "xi,re,im,abs\n";
  for (std::size_t k = 0; k < m.xi.size(); ++k) {
    out += format_double(m.xi[k]) + "," + format_double(m.values[k].real()) + "," +
           format_double(m.values[k].imag()) + "," + format_double(std::abs(m.values[k])) + "\n";
  }
  return out;
}

Json to_json(const awh::SymbolSamples& m) {
  const double lo = m.min_abs();
  const double hi = m.max_abs();
  return Json{{"points", m.xi.size()},
              {"min_abs", lo},
              {"max_abs", hi},
              {"ratio", lo > 0.0 ? Json(hi / lo) : Json(nullptr)},
              {"max_convergence", m.max_convergence()}};
}

Json to_json(const awh::DyadicConditions& c) {
  return Json{{"lower_condition", {{"holds", c.lower_holds}, {"xi0", c.lower_xi0}, {"inf", c.lower_inf}}},
              {"envelope_condition", {{"holds", c.envelope_holds}, {"constant", c.envelope_constant}}},
              {"symbol_min", c.symbol_min},
              {"symbol_max", c.symbol_max}};
}

Json to_json(const awh::DerivativeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"xi", row.xi},
                        {"finite_difference", {row.finite_difference.real(), row.finite_difference.imag()}},
                        {"formula", {row.formula.real(), row.formula.imag()}},
                        {"error", row.error}});
  }
  return Json{{"rows", std::move(rows)}, {"max_error", r.max_error}, {"tolerance", r.tolerance}, {"passed", r.passed()}};
}

Json to_json(const awh::GrowthStudy& g) {
  Json rows = Json::array();
  for (const auto& row : g.rows) {
    rows.push_back(Json{{"truncation", row.truncation},
                        {"integral", row.integral},
                        {"increment", row.increment},
                        {"log_slope", row.log_slope}});
  }
  return Json{{"rows", std::move(rows)},
              {"slope_spread", g.slope_spread},
              {"last_relative_increment", g.last_relative_increment},
              {"verdict", g.verdict}};
}

}  // namespace cnsgt::io

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cnsgt/awh/awh_io.hpp"
#include "cnsgt/nsgt.hpp"

namespace cnsgt::cli {

/// Finite-group payload. Referenced files are resolved relative to the
/// scenario file and loaded eagerly.
struct FinitePayload {
  WindowFamily analysis;
  std::optional<WindowFamily> synthesis;
  std::optional<Signal> signal;
  std::optional<CoefficientField> coefficients;

  const WindowFamily& synthesis_or_analysis() const { return synthesis ? *synthesis : analysis; }
};

/// Real-line payload.
struct AwhPayload {
  awh::SpectralWindow psi;
  awh::SpectralWindow phi;
  std::optional<awh::SpectralWindow> f;
  awh::WarpSpec warp;
  awh::FrequencyGrid grid;
  awh::QuadratureSpec quadrature;
  std::vector<double> truncations;
  int j_min = -kDefaultScaleRange;
  int j_max = kDefaultScaleRange;

  static constexpr int kDefaultScaleRange = 20;
};

struct Scenario {
  std::string name;
  std::optional<double> rel_tol;
  std::variant<FinitePayload, AwhPayload> payload;
};

/// Accepts a scenario ({"name", "finite"|"awh", "tolerances"}) or a bare
/// window-family manifest. Throws Error(parse) with a file or JSON-pointer
/// anchor on malformed input.
Scenario load_scenario(const std::filesystem::path& path);

Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir,
                            const std::string& where);

}  // namespace cnsgt::cli

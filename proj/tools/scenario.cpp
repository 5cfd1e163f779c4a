#include "scenario.hpp"

#include "cnsgt/error.hpp"
#include "cnsgt/serialization.hpp"

namespace cnsgt::cli {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::parse, where + ": " + what);
}

/// A value given inline, or a string naming a JSON file.
Json inline_or_file(const Json& j, const std::filesystem::path& base, std::string& where) {
  if (!j.is_string()) return j;
  const auto path = base / j.get<std::string>();
  where = path.string();
  return io::read_json_file(path);
}

WindowFamily load_family(const Json& j, const std::filesystem::path& base, std::string where) {
  const Json value = inline_or_file(j, base, where);
  return io::family_from_json(value, where);
}

Signal load_signal(const Json& j, const std::filesystem::path& base, const WindowFamily& family,
                   std::string where) {
  if (j.is_string()) {
    const auto path = base / j.get<std::string>();
    if (path.extension() == ".csv") {
      return io::signal_from_csv(io::read_text_file(path), family.group(), Side::time, path.string());
    }
  }
  const Json value = inline_or_file(j, base, where);
  return io::signal_from_json(value, where);
}

FinitePayload finite_from_json(const Json& j, const std::filesystem::path& base, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("analysis")) fail(where, "missing field 'analysis'");
  FinitePayload p{load_family(j.at("analysis"), base, where + "/analysis"), {}, {}, {}};
  if (j.contains("synthesis")) p.synthesis = load_family(j.at("synthesis"), base, where + "/synthesis");
  if (j.contains("signal")) p.signal = load_signal(j.at("signal"), base, p.analysis, where + "/signal");
  if (j.contains("coefficients")) {
    const Json& c = j.at("coefficients");
    if (!c.is_string()) fail(where + "/coefficients", "expected a CSV file name");
    const auto path = base / c.get<std::string>();
    p.coefficients = io::coefficients_from_csv(io::read_text_file(path), p.analysis, path.string());
  }
  return p;
}

AwhPayload awh_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::optional<awh::SpectralWindow> psi;
  std::optional<awh::SpectralWindow> phi;
  if (j.contains("pair")) {
    if (j.at("pair") != "composite_pair") fail(where + "/pair", "unknown builtin pair");
    auto [a, b] = awh::composite_pair();
    psi = a;
    phi = b;
  }
  if (j.contains("psi")) psi = io::window_from_json(j.at("psi"), where + "/psi");
  if (j.contains("phi")) phi = io::window_from_json(j.at("phi"), where + "/phi");
  if (!psi) fail(where, "missing field 'psi' (or 'pair')");
  if (!phi) phi = psi;
  if (!j.contains("warp")) fail(where, "missing field 'warp'");
  if (!j.contains("grid")) fail(where, "missing field 'grid'");
  AwhPayload p{*psi,
               *phi,
               std::nullopt,
               io::warp_from_json(j.at("warp"), where + "/warp"),
               io::grid_from_json(j.at("grid"), where + "/grid"),
               j.contains("quadrature") ? io::quadrature_from_json(j.at("quadrature"), where + "/quadrature")
                                        : awh::QuadratureSpec{},
               {}};
  if (j.contains("f")) p.f = io::window_from_json(j.at("f"), where + "/f");
  if (j.contains("truncations")) {
    const Json& t = j.at("truncations");
    if (!t.is_array()) fail(where + "/truncations", "expected an array of numbers");
    for (const auto& v : t) {
      if (!v.is_number()) fail(where + "/truncations", "expected an array of numbers");
      p.truncations.push_back(v.get<double>());
    }
  }
  if (j.contains("scales")) {
    const Json& s = j.at("scales");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer() ||
        s[0].get<int>() > s[1].get<int>()) {
      fail(where + "/scales", "expected [j_min, j_max] integers with j_min <= j_max");
    }
    p.j_min = s[0].get<int>();
    p.j_max = s[1].get<int>();
  }
  return p;
}

}  // namespace

Scenario scenario_from_json(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("channels")) {
    return Scenario{"manifest", std::nullopt, FinitePayload{io::family_from_json(j, where), {}, {}, {}}};
  }
  const bool finite = j.contains("finite");
  const bool real_line = j.contains("awh");
  if (finite == real_line) fail(where, "exactly one of 'finite' and 'awh' must be present");
  std::string name = "scenario";
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail(where + "/name", "expected a string");
    name = j.at("name").get<std::string>();
  }
  std::optional<double> rel_tol;
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) fail(where + "/tolerances", "expected an object");
    if (t.contains("rel_tol")) {
      if (!t.at("rel_tol").is_number() || !(t.at("rel_tol").get<double>() >= 0.0)) {
        fail(where + "/tolerances/rel_tol", "expected a number >= 0");
      }
      rel_tol = t.at("rel_tol").get<double>();
    }
  }
  if (finite) return Scenario{name, rel_tol, finite_from_json(j.at("finite"), base_dir, where + "/finite")};
  return Scenario{name, rel_tol, awh_from_json(j.at("awh"), where + "/awh")};
}

Scenario load_scenario(const std::filesystem::path& path) {
  const Json j = io::read_json_file(path);
  return scenario_from_json(j, path.parent_path(), path.string() + "#");
}

}  // namespace cnsgt::cli

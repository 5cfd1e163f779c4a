#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "cnsgt/awh/awh_io.hpp"
#include "cnsgt/error.hpp"
#include "cnsgt/frame_analysis.hpp"
#include "cnsgt/serialization.hpp"
#include "scenario.hpp"
#include "verify_paper.hpp"

namespace cnsgt::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Options {
  std::string scenario;
  std::string out_dir;
  std::optional<double> tol;
  std::optional<double> xi;
  std::optional<double> s;
  std::optional<std::size_t> nodes;
  std::vector<double> truncation;
};

/// Writes named artifacts to --out, or the first one to stdout.
class Sink {
 public:
  Sink(const Options& o, std::ostream& out) : dir_(o.out_dir), out_(out) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void emit(const std::string& name, const std::string& text, bool primary = true) {
    if (!dir_.empty()) {
      io::write_text_file(fs::path(dir_) / name, text);
    } else if (primary) {
      out_ << text;
    }
  }
  void emit(const std::string& name, const Json& j, bool primary = true) { emit(name, j.dump(2) + "\n", primary); }

 private:
  std::string dir_;
  std::ostream& out_;
};

std::string format_value(double v) {
  std::string s = io::format_double(v);
  if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
  return s;
}

Scenario require_scenario(const Options& o) {
  if (o.scenario.empty()) throw Error(Errc::parse, "--scenario is required");
  return load_scenario(o.scenario);
}

FinitePayload& finite(Scenario& s) {
  if (auto* p = std::get_if<FinitePayload>(&s.payload)) return *p;
  throw Error(Errc::parse, "this command needs a finite-group scenario");
}

AwhPayload& real_line(Scenario& s) {
  if (auto* p = std::get_if<AwhPayload>(&s.payload)) return *p;
  throw Error(Errc::parse, "this command needs an awh scenario");
}

double rel_tol(const Options& o, const Scenario& s) { return o.tol.value_or(s.rel_tol.value_or(kDefaultRelTol)); }

const Signal& require_signal(const FinitePayload& p) {
  if (!p.signal) throw Error(Errc::parse, "scenario has no 'signal'");
  return *p.signal;
}

void apply_overrides(const Options& o, AwhPayload& p) {
  if (o.s) p.warp.s = *o.s;
  if (o.nodes) p.quadrature.n_nodes = *o.nodes;
  if (!o.truncation.empty()) {
    p.quadrature.domain = awh::QuadratureDomain::truncated;
    p.quadrature.omega_min = -o.truncation.back();
    p.quadrature.omega_max = o.truncation.back();
  }
  p.quadrature.validate();
}

int awh_symbol(const Options& o, AwhPayload& p, Sink& sink) {
  apply_overrides(o, p);
  const auto m = awh::warped_symbol(p.psi, p.phi, p.warp, p.grid, p.quadrature);
  sink.emit("symbol.csv", io::to_csv(m));
  Json report = io::to_json(m);
  report["warp"] = p.warp.name;
  report["s"] = p.warp.s;
  sink.emit("report.json", report, false);
  return kExitOk;
}

int cmd_symbol(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  if (auto* a = std::get_if<AwhPayload>(&s.payload)) return awh_symbol(o, *a, sink);
  auto& p = finite(s);
  sink.emit("symbol.csv", io::to_csv(fourier_symbol(p.analysis, p.synthesis_or_analysis())));
  return kExitOk;
}

int cmd_analyze(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = finite(s);
  sink.emit("coefficients.csv", io::to_csv(analyze(require_signal(p), p.analysis)));
  return kExitOk;
}

int cmd_synthesize(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = finite(s);
  const auto& family = p.synthesis_or_analysis();
  CoefficientField F = p.coefficients ? *p.coefficients : analyze(require_signal(p), p.analysis);
  F = CoefficientField(family.group(), family.kind(), family.labels(), family.weights(), F.values());
  sink.emit("signal.json", io::to_json(synthesize(F, family)));
  return kExitOk;
}

int cmd_invert(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = finite(s);
  const auto& phi = p.synthesis_or_analysis();
  const auto m = fourier_symbol(p.analysis, phi);
  CoefficientField F = p.coefficients ? *p.coefficients : analyze(require_signal(p), p.analysis);
  F = CoefficientField(phi.group(), phi.kind(), phi.labels(), phi.weights(), F.values());
  sink.emit("signal.json", io::to_json(multiplier_invert(synthesize(F, phi), m, rel_tol(o, s))));
  return kExitOk;
}

int cmd_check(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = finite(s);
  const auto report = assess(p.analysis, p.synthesis_or_analysis(), rel_tol(o, s));
  sink.emit("report.json", io::to_json(report));
  const bool ok = report.kind == FrameKind::frame || report.kind == FrameKind::reproducing_pair;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_awh_composite(const Options& o, std::ostream& out) {
  auto [psi, phi] = awh::composite_pair();
  if (!o.scenario.empty()) {
    auto s = load_scenario(o.scenario);
    auto& p = real_line(s);
    psi = p.psi;
    phi = p.phi;
  }
  if (!o.xi) throw Error(Errc::parse, "--xi is required");
  const Complex m = awh::composite_closed_form(psi, phi, *o.xi);
  out << format_value(m.real());
  if (m.imag() != 0.0) out << (m.imag() < 0.0 ? " - " : " + ") << format_value(std::abs(m.imag())) << "i";
  out << "\n";
  return kExitOk;
}

int cmd_awh_dyadic(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = real_line(s);
  Json report;
  if (o.xi) {
    const auto d = awh::dyadic_wavelet_symbol(p.psi, *o.xi, p.j_min, p.j_max, p.grid);
    report = io::to_json(d.conditions);
    report["xi"] = *o.xi;
    report["value"] = d.value;
    report["tail_bound"] = std::isfinite(d.tail_bound) ? Json(d.tail_bound) : Json(nullptr);
    report["scales"] = {p.j_min, p.j_max};
  } else {
    report = io::to_json(awh::dyadic_conditions(p.psi, p.grid));
  }
  sink.emit("report.json", report);
  return kExitOk;
}

int cmd_awh_dual(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = real_line(s);
  const auto d = awh::canonical_dual_wavelet(p.psi, p.grid, rel_tol(o, s));
  awh::SymbolSamples samples{d.xi, d.dual, std::vector<double>(d.xi.size(), 0.0)};
  sink.emit("dual.csv", io::to_csv(samples));
  sink.emit("report.json", Json{{"max_cross_error", d.max_cross_error}}, false);
  return kExitOk;
}

int cmd_awh_derivative(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = real_line(s);
  const std::vector<double> xi = o.xi ? std::vector<double>{*o.xi} : p.grid.points();
  const auto report = awh::derivative_identity_check(p.psi, p.phi, xi, o.tol.value_or(1e-6));
  sink.emit("report.json", io::to_json(report));
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_awh_growth(const Options& o, Sink& sink) {
  auto s = require_scenario(o);
  auto& p = real_line(s);
  std::vector<double> r = o.truncation.empty() ? p.truncations : o.truncation;
  if (r.empty()) r = {10.0, 1e2, 1e3, 1e4};
  const auto f = p.f ? *p.f : awh::SpectralWindow::indicator(-1.0, 1.0);
  sink.emit("report.json", io::to_json(awh::norm_growth_study(f, p.psi, p.warp, r)));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, Sink& sink) {
  const auto records = verify_paper(o.tol);
  out << format_table(records);
  sink.emit("verification.json", to_json(records), false);
  const bool ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  return ok ? kExitOk : kExitCheckFailed;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_invertible:
    case Errc::not_a_frame:
    case Errc::numeric:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous nonstationary Gabor transforms and reproducing pairs", "cnsgt"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool scenario_required) {
    auto* opt = sub->add_option("--scenario", o.scenario, "scenario or family manifest (JSON)");
    if (scenario_required) opt->required();
    sub->add_option("--out", o.out_dir, "directory for output artifacts (default: stdout)");
    sub->add_option("--tol", o.tol, "tolerance override");
  };
  auto awh_flags = [&](CLI::App* sub) {
    sub->add_option("--xi", o.xi, "frequency");
    sub->add_option("--s", o.s, "measure exponent s");
    sub->add_option("--nodes", o.nodes, "quadrature node count");
    sub->add_option("--truncation", o.truncation, "omega truncation (growth: list of R)");
  };

  auto* symbol = app.add_subcommand("symbol", "Fourier symbol m of the scenario (CSV)");
  common(symbol, true);
  awh_flags(symbol);
  auto* analyze_cmd = app.add_subcommand("analyze", "coefficients V_Psi f (CSV)");
  common(analyze_cmd, true);
  auto* synthesize_cmd = app.add_subcommand("synthesize", "synthesis V*_Phi F (signal JSON)");
  common(synthesize_cmd, true);
  auto* invert = app.add_subcommand("invert", "reconstruction C^-1 V*_Phi F (signal JSON)");
  common(invert, true);
  auto* check = app.add_subcommand("check", "frame / reproducing-pair verdict (JSON)");
  common(check, true);
  auto* verify = app.add_subcommand("verify-paper", "run the built-in identity checks");
  verify->add_option("--out", o.out_dir, "directory for verification.json");
  verify->add_option("--tol", o.tol, "override every numeric tolerance");

  auto* awh = app.add_subcommand("awh", "real-line warped systems");
  awh->require_subcommand(1);
  auto* composite = awh->add_subcommand("composite", "closed-form composite symbol at --xi");
  common(composite, false);
  awh_flags(composite);
  auto* awh_sym = awh->add_subcommand("symbol", "warped symbol on the scenario grid (CSV + JSON report)");
  common(awh_sym, true);
  awh_flags(awh_sym);
  auto* dyadic = awh->add_subcommand("dyadic", "dyadic wavelet symbol and admissibility report");
  common(dyadic, true);
  awh_flags(dyadic);
  auto* dual = awh->add_subcommand("dual", "canonical dual of the dyadic wavelet system (CSV)");
  common(dual, true);
  auto* derivative = awh->add_subcommand("derivative", "derivative identity of the composite symbol");
  common(derivative, true);
  awh_flags(derivative);
  auto* growth = awh->add_subcommand("growth", "coefficient-norm growth study");
  common(growth, true);
  awh_flags(growth);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    Sink sink(o, out);
    if (*symbol) return cmd_symbol(o, sink);
    if (*analyze_cmd) return cmd_analyze(o, sink);
    if (*synthesize_cmd) return cmd_synthesize(o, sink);
    if (*invert) return cmd_invert(o, sink);
    if (*check) return cmd_check(o, sink);
    if (*verify) return cmd_verify(o, out, sink);
    if (*composite) return cmd_awh_composite(o, out);
    if (*dyadic) return cmd_awh_dyadic(o, sink);
    if (*dual) return cmd_awh_dual(o, sink);
    if (*derivative) return cmd_awh_derivative(o, sink);
    if (*growth) return cmd_awh_growth(o, sink);
    if (*awh_sym) {
      auto s = require_scenario(o);
      return awh_symbol(o, real_line(s), sink);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cnsgt::cli

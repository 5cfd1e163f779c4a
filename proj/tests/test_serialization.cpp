#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include "cnsgt/awh/awh_io.hpp"
#include "cnsgt/error.hpp"
#include "cnsgt/serialization.hpp"
#include "oracles.hpp"

using namespace cnsgt;
using io::Json;

namespace {

// Returns the message of the Error thrown by fn, or "" if none was thrown.
std::string error_message(Errc code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code ? std::string(e.what()) : "wrong code: " + std::string(e.what());
  }
  return "";
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

std::filesystem::path scratch_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "cnsgt_serialization_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  io::write_text_file(path, text);
  return path;
}

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("format_double keeps 17 significant digits and round-trips") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(3.0) == "3");
    for (double v : {1.0 / 3.0, -2.5e-300, 6.02214076e23, std::nextafter(1.0, 2.0)}) {
      CHECK(std::stod(io::format_double(v)) == v);
    }
  }

  TEST_CASE("signal JSON and CSV round trips are exact") {
    oracle::Rng rng(4);
    for (const auto& factors : {std::vector<std::size_t>{7}, {3, 4}, {2, 3, 2}}) {
      const Group g(factors);
      const Signal f = oracle::random_signal(g, rng);
      const Signal j = io::signal_from_json(Json::parse(io::to_json(f).dump()));
      CHECK(j.group() == g);
      CHECK(j.side() == Side::time);
      CHECK(j.values() == f.values());
      const Signal c = io::signal_from_csv(io::to_csv(f), g, Side::time);
      CHECK(c.values() == f.values());
    }
    const Signal s = fourier(oracle::random_signal(Group({5}), rng), Direction::forward);
    CHECK(io::signal_from_json(io::to_json(s)).side() == Side::spectral);
  }

  TEST_CASE("signal CSV layout: header, row-major coordinates") {
    const Group g({2, 2});
    const Signal f(g, Side::time, {1.0, 2.0, Complex(0.0, 3.0), 4.0});
    const std::string csv = io::to_csv(f);
    CHECK(csv.rfind("coord_1,coord_2,re,im\n0,0,1,0\n0,1,2,0\n1,0,0,3\n", 0) == 0);
    // Row order does not matter on input.
    const Signal back = io::signal_from_csv("coord_1,coord_2,re,im\n1,1,4,0\n0,0,1,0\n", g, Side::time);
    CHECK(back[3] == Complex(4.0));
    CHECK(back[1] == Complex(0.0));
  }

  TEST_CASE("signal JSON: im defaults to zero; errors name the field") {
    const Signal f = io::signal_from_json(Json::parse(R"({"group":[3],"re":[1,2,3]})"));
    CHECK(f[2] == Complex(3.0));
    CHECK(contains(error_message(Errc::parse, [] { io::signal_from_json(Json::parse(R"({"re":[1]})")); }),
                   "missing field 'group'"));
    CHECK(contains(error_message(Errc::parse, [] { io::signal_from_json(Json::parse(R"({"group":[3],"re":[1,2]})")); }),
                   "expected 3 values"));
    CHECK(contains(error_message(Errc::parse,
                                 [] { io::signal_from_json(Json::parse(R"({"group":[0],"re":[]})"), "s.json"); }),
                   "s.json/group"));
    CHECK(contains(error_message(Errc::parse,
                                 [] { io::signal_from_json(Json::parse(R"({"group":[2],"side":"x","re":[1,2]})")); }),
                   "signal/side"));
    CHECK(contains(error_message(Errc::parse, [] { io::signal_from_json(Json::parse(R"({"group":[2],"re":[1,"a"]})")); }),
                   "signal/re"));
  }

  TEST_CASE("CSV errors carry line anchors") {
    const Group g({3});
    const std::string header = "coord_1,re,im\n";
    CHECK(contains(error_message(Errc::parse, [&] { io::signal_from_csv(header + "0,1,0\n1,x,0\n", g, Side::time, "f.csv"); }),
                   "f.csv:3: malformed number 'x'"));
    CHECK(contains(error_message(Errc::parse, [&] { io::signal_from_csv(header + "0,1\n", g, Side::time, "f.csv"); }),
                   "f.csv:2: expected 3 columns"));
    CHECK(contains(error_message(Errc::parse, [&] { io::signal_from_csv(header + "5,1,0\n", g, Side::time, "f.csv"); }),
                   "f.csv:2: coordinates out of range"));
    CHECK(contains(error_message(Errc::parse, [&] {
                     io::signal_from_csv(header + "1,1,0\n\n1,2,0\n", g, Side::time, "f.csv");
                   }),
                   "f.csv:4: duplicate point"));
    CHECK(contains(error_message(Errc::parse, [&] { io::signal_from_csv(header + "-1,1,0\n", g, Side::time, "f.csv"); }),
                   "f.csv:2: malformed coordinate"));
  }

  TEST_CASE("family JSON round trip keeps kind, labels, weights and windows") {
    oracle::Rng rng(8);
    for (auto kind : {SystemKind::translation, SystemKind::character}) {
      const auto fam = oracle::random_family(Group({2, 3}), kind, 3, rng);
      const auto back = io::family_from_json(Json::parse(io::to_json(fam).dump()));
      CHECK(back.kind() == kind);
      CHECK(back.labels() == fam.labels());
      REQUIRE(back.size() == fam.size());
      for (std::size_t c = 0; c < fam.size(); ++c) {
        CHECK(back.channels()[c].weight == fam.channels()[c].weight);
        CHECK(back.channels()[c].window.values() == fam.channels()[c].window.values());
      }
    }
  }

  TEST_CASE("family JSON errors") {
    const auto window = R"({"group":[2],"re":[1,0]})";
    auto family = [&](const std::string& kind, const std::string& group, const std::string& weight) {
      return Json::parse(R"({"group":)" + group + R"(,"kind":")" + kind + R"(","channels":[{"label":"a","weight":)" +
                         weight + R"(,"window":)" + window + "}]}");
    };
    CHECK(io::family_from_json(family("translation", "[2]", "1")).size() == 1);
    CHECK(contains(error_message(Errc::parse, [&] { io::family_from_json(family("wavelet", "[2]", "1")); }),
                   "family/kind"));
    CHECK(contains(error_message(Errc::parse, [&] { io::family_from_json(family("translation", "[3]", "1")); }),
                   "family/channels/0/window"));
    CHECK(contains(error_message(Errc::parse, [&] { io::family_from_json(family("translation", "[2]", "\"x\"")); }),
                   "family/channels/0/weight"));
    CHECK(!error_message(Errc::parse, [&] { io::family_from_json(family("translation", "[2]", "-1")); }).empty());
  }

  TEST_CASE("coefficient CSV round trip and errors") {
    oracle::Rng rng(12);
    const auto fam = oracle::random_family(Group({4}), SystemKind::translation, 2, rng);
    const auto F = analyze(oracle::random_signal(fam.group(), rng), fam);
    const auto back = io::coefficients_from_csv(io::to_csv(F), fam);
    CHECK(back.values() == F.values());
    CHECK(back.labels() == F.labels());

    const std::string header = "coord_1,channel,re,im\n";
    CHECK(contains(error_message(Errc::parse, [&] { io::coefficients_from_csv(header + "0,zz,1,0\n", fam, "c.csv"); }),
                   "c.csv:2: unknown channel 'zz'"));
    CHECK(contains(error_message(Errc::parse,
                                 [&] { io::coefficients_from_csv(header + "0,ch0,1,0\n0,ch0,2,0\n", fam, "c.csv"); }),
                   "c.csv:3: duplicate entry"));
  }

  TEST_CASE("symbol CSV and frame report JSON") {
    const Group g({3});
    const Signal w(g, Side::time, {1.0, 0.0, 0.0});
    const WindowFamily fam(g, SystemKind::translation, {Channel{"a", w, 1.0}});
    const std::string csv = io::to_csv(fourier_symbol(fam, fam));
    CHECK(csv == "coord_1,re,im,abs\n0,1,0,1\n1,1,0,1\n2,1,0,1\n");
    const Json r = io::to_json(assess(fam, fam));
    CHECK(r.at("lower") == 1.0);
    CHECK(r.at("upper") == 1.0);
    CHECK(r.at("tight") == true);
  }

  TEST_CASE("JSON files: syntax errors report file:line:col") {
    const auto path = scratch_file("bad.json", "{\n  \"a\": ,\n}\n");
    const std::string msg = error_message(Errc::parse, [&] { io::read_json_file(path); });
    CHECK(contains(msg, path.string() + ":2:"));
    CHECK(contains(msg, "malformed JSON"));
    CHECK(contains(error_message(Errc::parse, [] { io::read_json_file("/nonexistent/x.json"); }), "cannot open"));

    const auto good = scratch_file("good.json", R"({"x": [1, 2]})");
    CHECK(io::read_json_file(good).at("x").size() == 2);
  }

  TEST_CASE("awh windows from JSON") {
    const auto poly = io::window_from_json(
        Json::parse(R"({"form":"polynomial","pieces":[{"lo":-1,"hi":1,"coeffs":[1,[0,2]]}]})"));
    CHECK(poly(0.5) == Complex(1.0, 1.0));
    CHECK(poly(1.5) == Complex(0.0));

    const auto gauss = io::window_from_json(Json::parse(R"({"form":"gaussian","center":1,"width":2,"normalized":true})"));
    const auto unit = awh::SpectralWindow::unit_gaussian(1.0, 2.0);
    CHECK(std::abs(gauss(0.3) - unit(0.3)) <= 1e-15);

    const auto bump = io::window_from_json(
        Json::parse(R"({"form":"gaussian","width":0.5,"poly":[1,-1],"support":[-1,1]})"));
    CHECK(bump(1.5) == Complex(0.0));
    CHECK(bump(0.0) == Complex(1.0));

    const auto sampled = io::window_from_json(Json::parse(R"({"form":"sampled","grid":[0,1],"values":[0,2]})"));
    CHECK(sampled(0.25) == Complex(0.5));

    const auto psi = io::window_from_json(Json::parse(R"({"builtin":"composite_psi"})"));
    const auto phi = io::window_from_json(Json::parse(R"({"builtin":"composite_phi"})"));
    CHECK(psi(0.5) == Complex(0.5));
    CHECK(phi(0.5) == Complex(1.5));
    CHECK(io::window_from_json(Json::parse(R"({"builtin":"indicator","lo":1,"hi":2})"))(1.5) == Complex(1.0));

    CHECK(contains(error_message(Errc::parse, [] { io::window_from_json(Json::parse(R"({"form":"spline"})")); }),
                   "window/form"));
    CHECK(contains(error_message(Errc::parse, [] { io::window_from_json(Json::parse(R"({"builtin":"nope"})")); }),
                   "window/builtin"));
    CHECK(contains(error_message(Errc::parse,
                                 [] {
                                   io::window_from_json(Json::parse(
                                       R"({"form":"polynomial","pieces":[{"lo":0,"hi":1,"coeffs":["a"]}]})"));
                                 }),
                   "window/pieces/0/coeffs/0"));
    CHECK(!error_message(Errc::parse, [] { io::window_from_json(Json::parse(R"({"form":"gaussian","width":-1})")); })
               .empty());
  }

  TEST_CASE("awh warps, grids and quadrature from JSON") {
    const auto w = io::warp_from_json(Json::parse(R"({"builtin":"composite"})"));
    CHECK(w.s == 1.0);
    CHECK(w.beta(1.0) == 0.5);
    const auto t = io::warp_from_json(Json::parse(R"({"builtin":"torresani","lambda":2,"s":-1})"));
    CHECK(t.eta(1.0) == 0.0);
    CHECK(t.eta(0.5) == 2.0);
    CHECK(io::warp_from_json(Json::parse(R"({"builtin":"stft","s":0.5})")).s == 0.5);
    CHECK(contains(error_message(Errc::parse, [] { io::warp_from_json(Json::parse(R"({"builtin":"torresani"})")); }),
                   "missing field 'lambda'"));
    CHECK(contains(error_message(Errc::parse, [] { io::warp_from_json(Json::parse(R"({"builtin":"chirp"})")); }),
                   "warp/builtin"));

    const auto g = io::grid_from_json(Json::parse(R"({"xi_min":-1,"xi_max":1,"n_points":5})"));
    CHECK(g.at(1) == -0.5);
    CHECK(!error_message(Errc::parse, [] { io::grid_from_json(Json::parse(R"({"xi_min":1,"xi_max":0,"n_points":5})")); })
               .empty());
    CHECK(contains(
        error_message(Errc::parse, [] { io::grid_from_json(Json::parse(R"({"xi_min":0,"xi_max":1,"n_points":1})")); }),
        "grid/n_points"));

    const auto q = io::quadrature_from_json(Json::parse(R"({"n_nodes":1001,"rule":"midpoint","domain":"whole_line"})"));
    CHECK(q.n_nodes == 1001);
    CHECK(q.rule == awh::QuadratureRule::midpoint);
    CHECK(q.domain == awh::QuadratureDomain::whole_line);
    CHECK(q.omega_max == 1e3);
    CHECK(contains(error_message(Errc::parse, [] { io::quadrature_from_json(Json::parse(R"({"n_nodes":4})")); }),
                   "quadrature/n_nodes"));
    CHECK(contains(error_message(Errc::parse, [] { io::quadrature_from_json(Json::parse(R"({"rule":"simpson"})")); }),
                   "quadrature/rule"));
  }

  TEST_CASE("awh symbol CSV and reports") {
    awh::SymbolSamples m;
    m.xi = {0.0, 0.5};
    m.values = {3.0, Complex(2.75, -1.0)};
    m.convergence = {1e-9, 2e-9};
    CHECK(io::to_csv(m) == "xi,re,im,abs\n0,3,0,3\n0.5,2.75,-1," + io::format_double(std::abs(m.values[1])) + "\n");
    const Json j = io::to_json(m);
    CHECK(j.at("points") == 2);
    CHECK(j.at("max_abs") == 3.0);
    CHECK(j.at("max_convergence") == 2e-9);

    awh::GrowthStudy s;
    s.rows = {{10.0, 1.0, 0.0, 0.0}};
    s.verdict = "inconclusive";
    CHECK(io::to_json(s).at("verdict") == "inconclusive");
  }
}

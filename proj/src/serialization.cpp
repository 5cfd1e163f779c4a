#include "cnsgt/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cnsgt/error.hpp"
#include "json_detail.hpp"

namespace cnsgt::io {

namespace {

using detail::fail;
using detail::field;
using detail::numbers;

std::vector<std::size_t> factors_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "group must be a nonempty array of positive integers");
  std::vector<std::size_t> f;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(where, "group factors must be positive integers");
    f.push_back(v.get<std::size_t>());
  }
  return f;
}

std::string coords_header(std::size_t rank) {
  std::string h;
  for (std::size_t k = 0; k < rank; ++k) h += "coord_" + std::to_string(k + 1) + ",";
  return h;
}

void append_coords(std::string& out, const GroupElement& e) {
  for (auto c : e.coords) out += std::to_string(c) + ",";
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto& c : cells) {
    while (!c.empty() && (c.back() == '\r' || c.back() == ' ')) c.pop_back();
    while (!c.empty() && c.front() == ' ') c.erase(c.begin());
  }
  return cells;
}

double parse_number(const std::string& cell, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) fail(where, "malformed number '" + cell + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(where, "malformed number '" + cell + "'");
  }
}

std::size_t parse_index(const std::string& cell, const std::string& where) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(cell, &used);
    if (used != cell.size() || cell.front() == '-') fail(where, "malformed coordinate '" + cell + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    fail(where, "malformed coordinate '" + cell + "'");
  }
}

// Iterates non-empty lines after the header, with 1-based line numbers.
template <class Fn>
void for_each_row(std::string_view text, const std::string& where, std::size_t expected_cells, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header = true;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (line.empty() || line == "\r") {
      if (end == text.size()) break;
      continue;
    }
    const auto cells = split(line);
    const std::string anchor = where + ":" + std::to_string(line_no);
    if (cells.size() != expected_cells) {
      fail(anchor, "expected " + std::to_string(expected_cells) + " columns, found " + std::to_string(cells.size()));
    }
    if (header) {
      header = false;
    } else {
      fn(cells, anchor);
    }
    if (end == text.size()) break;
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const Signal& s) {
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& v : s.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return Json{{"group", s.group().factors()},
              {"side", s.side() == Side::time ? "time" : "spectral"},
              {"re", std::move(re)},
              {"im", std::move(im)}};
}

Signal signal_from_json(const Json& j, const std::string& where) {
  Group g(factors_from_json(field(j, "group", where), where + "/group"));
  Side side = Side::time;
  if (auto it = j.find("side"); it != j.end()) {
    if (*it == "time") {
      side = Side::time;
    } else if (*it == "spectral") {
      side = Side::spectral;
    } else {
      fail(where + "/side", "side must be \"time\" or \"spectral\"");
    }
  }
  const auto re = numbers(field(j, "re", where), where + "/re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = numbers(j.at("im"), where + "/im");
  if (re.size() != g.order() || im.size() != g.order()) {
    fail(where, "expected " + std::to_string(g.order()) + " values in re and im");
  }
  ComplexVector v(g.order());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {re[i], im[i]};
  return Signal(std::move(g), side, std::move(v));
}

std::string to_csv(const Signal& s) {
  const Group& g = s.group();
  std::string out = coords_header(g.rank()) + "re,im\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    append_coords(out, g.element(i));
    out += format_double(s[i].real()) + "," + format_double(s[i].imag()) + "\n";
  }
  return out;
}

Signal signal_from_csv(std::string_view text, const Group& group, Side side, const std::string& where) {
  Signal s(group, side);
  std::vector<bool> seen(group.order(), false);
  for_each_row(text, where, group.rank() + 2, [&](const std::vector<std::string>& cells, const std::string& anchor) {
    GroupElement e;
    for (std::size_t k = 0; k < group.rank(); ++k) e.coords.push_back(parse_index(cells[k], anchor));
    if (!group.contains(e)) fail(anchor, "coordinates out of range");
    const std::size_t idx = group.index(e);
    if (seen[idx]) fail(anchor, "duplicate point");
    seen[idx] = true;
    s[idx] = {parse_number(cells[group.rank()], anchor), parse_number(cells[group.rank() + 1], anchor)};
  });
  return s;
}

Json to_json(const WindowFamily& family) {
  Json channels = Json::array();
  for (const auto& ch : family.channels()) {
    channels.push_back(Json{{"label", ch.label}, {"weight", ch.weight}, {"window", to_json(ch.window)}});
  }
  return Json{{"group", family.group().factors()},
              {"kind", family.kind() == SystemKind::translation ? "translation" : "character"},
              {"channels", std::move(channels)}};
}

WindowFamily family_from_json(const Json& j, const std::string& where) {
  Group g(factors_from_json(field(j, "group", where), where + "/group"));
  const Json& kind = field(j, "kind", where);
  SystemKind k = SystemKind::translation;
  if (kind == "translation") {
    k = SystemKind::translation;
  } else if (kind == "character") {
    k = SystemKind::character;
  } else {
    fail(where + "/kind", "kind must be \"translation\" or \"character\"");
  }
  const Json& chans = field(j, "channels", where);
  if (!chans.is_array()) fail(where + "/channels", "expected an array");
  std::vector<Channel> channels;
  for (std::size_t i = 0; i < chans.size(); ++i) {
    const std::string at = where + "/channels/" + std::to_string(i);
    const Json& label = field(chans[i], "label", at);
    const Json& weight = field(chans[i], "weight", at);
    if (!label.is_string()) fail(at + "/label", "expected a string");
    if (!weight.is_number()) fail(at + "/weight", "expected a number");
    Signal w = signal_from_json(field(chans[i], "window", at), at + "/window");
    if (!(w.group() == g)) fail(at + "/window", "window group differs from family group");
    channels.push_back(Channel{label.get<std::string>(), std::move(w), weight.get<double>()});
  }
  try {
    return WindowFamily(std::move(g), k, std::move(channels));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::string to_csv(const CoefficientField& F) {
  const Group& g = F.group();
  std::string out = coords_header(g.rank()) + "channel,re,im\n";
  for (std::size_t c = 0; c < F.channels(); ++c) {
    for (std::size_t x = 0; x < F.points(); ++x) {
      append_coords(out, g.element(x));
      const Complex v = F.at(x, c);
      out += F.labels()[c] + "," + format_double(v.real()) + "," + format_double(v.imag()) + "\n";
    }
  }
  return out;
}

CoefficientField coefficients_from_csv(std::string_view text, const WindowFamily& family, const std::string& where) {
  CoefficientField F = CoefficientField::zeros(family);
  const Group& g = family.group();
  const auto labels = family.labels();
  std::vector<bool> seen(F.values().size(), false);
  for_each_row(text, where, g.rank() + 3, [&](const std::vector<std::string>& cells, const std::string& anchor) {
    GroupElement e;
    for (std::size_t k = 0; k < g.rank(); ++k) e.coords.push_back(parse_index(cells[k], anchor));
    if (!g.contains(e)) fail(anchor, "coordinates out of range");
    const auto it = std::find(labels.begin(), labels.end(), cells[g.rank()]);
    if (it == labels.end()) fail(anchor, "unknown channel '" + cells[g.rank()] + "'");
    const auto c = static_cast<std::size_t>(it - labels.begin());
    const std::size_t flat = c * g.order() + g.index(e);
    if (seen[flat]) fail(anchor, "duplicate entry");
    seen[flat] = true;
    F.values()[flat] = {parse_number(cells[g.rank() + 1], anchor), parse_number(cells[g.rank() + 2], anchor)};
  });
  return F;
}

std::string to_csv(const FourierSymbol& m) {
  const Group& g = m.group();
  std::string out = coords_header(g.rank()) + "re,im,abs\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    append_coords(out, g.element(i));
    out += format_double(m[i].real()) + "," + format_double(m[i].imag()) + "," + format_double(std::abs(m[i])) + "\n";
  }
  return out;
}

Json to_json(const FrameReport& r) {
  return Json{{"kind", std::string(to_string(r.kind))},
              {"lower", r.lower},
              {"upper", r.upper},
              {"cross_bound", r.cross_bound},
              {"tight", r.tight},
              {"symbol_min_abs", r.symbol_min_abs},
              {"symbol_max_abs", r.symbol_max_abs}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse, path.string() + ": cannot write file");
  out << text;
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line/column anchor.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::parse, path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                 "malformed JSON");
  }
}

}  // namespace cnsgt::io

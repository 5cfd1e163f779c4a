#pragma once

// File formats. Element coordinates are written in the group's row-major
// enumeration order; CSV numbers use 17 significant digits.
//
//   Signal JSON   {"group":[N1,...],"side":"time"|"spectral","re":[...],"im":[...]}
//   Signal CSV    coord_1,...,coord_d,re,im
//   Family JSON   {"group":[...],"kind":"translation"|"character",
//                  "channels":[{"label":s,"weight":w,"window":<signal JSON>}]}
//   Coefficients  coord_1,...,coord_d,channel,re,im
//   Symbol CSV    coord_1,...,coord_d,re,im,abs

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cnsgt/frame_analysis.hpp"
#include "cnsgt/nsgt.hpp"

namespace cnsgt::io {

using Json = nlohmann::json;

std::string format_double(double v);

Json to_json(const Signal& s);
/// `where` prefixes diagnostics (file name or JSON pointer).
Signal signal_from_json(const Json& j, const std::string& where = "signal");
std::string to_csv(const Signal& s);
Signal signal_from_csv(std::string_view text, const Group& group, Side side, const std::string& where = "csv");

Json to_json(const WindowFamily& family);
WindowFamily family_from_json(const Json& j, const std::string& where = "family");

std::string to_csv(const CoefficientField& F);
CoefficientField coefficients_from_csv(std::string_view text, const WindowFamily& family,
                                       const std::string& where = "csv");

std::string to_csv(const FourierSymbol& m);
Json to_json(const FrameReport& r);

/// Reads and parses a JSON file; syntax errors become Error(parse) with a
/// "file:line:column" anchor.
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cnsgt::io

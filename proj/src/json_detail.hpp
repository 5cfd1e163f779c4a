#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cnsgt/error.hpp"

namespace cnsgt::io::detail {

using Json = nlohmann::json;

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::parse, where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

inline double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

inline std::vector<double> numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) fail(where, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace cnsgt::io::detail

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cnsgt::cli {

struct VerificationRecord {
  std::string id;
  std::string anchor;
  std::string expected;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs every built-in identity check. A tolerance override replaces the
/// tolerance of every numeric comparison.
std::vector<VerificationRecord> verify_paper(std::optional<double> tolerance_override = std::nullopt);

std::string format_table(const std::vector<VerificationRecord>& records);
nlohmann::json to_json(const std::vector<VerificationRecord>& records);

}  // namespace cnsgt::cli

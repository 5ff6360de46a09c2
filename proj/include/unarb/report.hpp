#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

namespace unarb {

/// Machine-readable outcome of one CLI command. Witness layout depends on
/// the verdict; rationals inside are always "p/q" strings, never floats.
struct VerdictReport {
  std::string command;
  std::string input_digest;
  std::string verdict;
  nlohmann::json witness;  // null when the verdict carries no witness
  std::int64_t elapsed_ms = 0;

  bool operator==(const VerdictReport&) const = default;
};

nlohmann::json to_json(const VerdictReport& report);
VerdictReport report_from_json(const nlohmann::json& doc);

/// FNV-1a over the raw bytes, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

}  // namespace unarb

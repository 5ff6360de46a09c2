#include "unarb/report.hpp"

#include <array>

#include "unarb/errors.hpp"

namespace unarb {

nlohmann::json to_json(const VerdictReport& report) {
  return nlohmann::json{{"command", report.command},
                        {"input_digest", report.input_digest},
                        {"verdict", report.verdict},
                        {"witness", report.witness},
                        {"elapsed_ms", report.elapsed_ms}};
}

VerdictReport report_from_json(const nlohmann::json& doc) {
  for (const char* key :
       {"command", "input_digest", "verdict", "witness", "elapsed_ms"})
    if (!doc.contains(key))
      throw ParseError(std::string("report is missing '") + key + "'");
  VerdictReport report;
  report.command = doc["command"].get<std::string>();
  report.input_digest = doc["input_digest"].get<std::string>();
  report.verdict = doc["verdict"].get<std::string>();
  report.witness = doc["witness"];
  report.elapsed_ms = doc["elapsed_ms"].get<std::int64_t>();
  return report;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4)
    out.push_back(hex[(hash >> shift) & 0xf]);
  return out;
}

}  // namespace unarb

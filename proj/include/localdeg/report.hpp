#pragma once

// Verification reports shared by the command-line tool and the acceptance
// runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace localdeg {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };
/// Proof: a structural argument or an exact identity. Exhaustive: every case
/// enumerated. Sampled: seeded random cases.
enum class EvidenceKind { Proof, Exhaustive, Sampled };

std::string to_string(CheckStatus s);
std::string to_string(EvidenceKind k);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  EvidenceKind kind = EvidenceKind::Proof;
  std::string details;
  std::optional<std::uint64_t> seed;  // set for sampled checks
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Check> checks;
  std::optional<std::uint64_t> seed;
  Json data = Json::object();
  std::optional<std::int64_t> elapsed_ms;

  void add(std::string name, bool ok, EvidenceKind kind, std::string details = {});
  void add_sampled(std::string name, bool ok, std::uint64_t seed, std::string details = {});
  void skip(std::string name, EvidenceKind kind, std::string details);
  bool passed() const;
  /// 0 when no check failed, else 1.
  int exit_code() const;
};

Json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace localdeg

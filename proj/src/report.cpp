#include "localdeg/report.hpp"

#include <algorithm>
#include <sstream>

namespace localdeg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::Proof: return "proof";
    case EvidenceKind::Exhaustive: return "exhaustive";
    case EvidenceKind::Sampled: return "sampled";
  }
  return "proof";
}

void Report::add(std::string name, bool ok, EvidenceKind kind, std::string details) {
  checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, kind, std::move(details), {}});
}

void Report::add_sampled(std::string name, bool ok, std::uint64_t s, std::string details) {
  checks.push_back(
      {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, EvidenceKind::Sampled, std::move(details), s});
}

void Report::skip(std::string name, EvidenceKind kind, std::string details) {
  checks.push_back({std::move(name), CheckStatus::Skipped, kind, std::move(details), {}});
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

int Report::exit_code() const { return passed() ? 0 : 1; }

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["params"] = r.params;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["kind"] = to_string(c.kind);
    cj["details"] = c.details;
    if (c.seed) cj["seed"] = *c.seed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["data"] = r.data;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& [k, v] : r.params.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  os << '\n';
  if (r.seed) os << "seed " << *r.seed << '\n';
  for (const auto& c : r.checks) {
    os << '[' << to_string(c.status) << "] " << c.name << " (" << to_string(c.kind);
    if (c.seed) os << ", seed " << *c.seed;
    os << ')';
    if (!c.details.empty()) os << ": " << c.details;
    os << '\n';
  }
  if (!r.data.empty()) {
    for (const auto& [k, v] : r.data.items()) {
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
  if (r.elapsed_ms) os << "elapsed_ms " << *r.elapsed_ms << '\n';
  const std::size_t failed = std::count_if(r.checks.begin(), r.checks.end(),
                                           [](const Check& c) { return c.status == CheckStatus::Fail; });
  os << (failed ? "FAIL" : "OK") << ' ' << r.checks.size() << " checks, " << failed << " failed\n";
  return os.str();
}

}  // namespace localdeg

#include "crlie/report.hpp"

#include <sstream>

#include "json.hpp"

namespace crlie {

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::discrepancy: return "discrepancy";
  }
  return "?";
}
}  // namespace

void CheckReport::add(std::string id, bool ok, std::string witness) {
  add_status(std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness));
}

void CheckReport::add_status(std::string id, CheckStatus st, std::string witness) {
  entries.push_back({std::move(id), st, std::move(witness), 0.0});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& e : other.entries) {
    CheckEntry copy = e;
    copy.id = other.suite.empty() ? e.id : other.suite + "." + e.id;
    entries.push_back(std::move(copy));
  }
}

int CheckReport::fail_count() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.status == CheckStatus::fail) ++n;
  return n;
}

int CheckReport::discrepancy_count() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.status == CheckStatus::discrepancy) ++n;
  return n;
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json c;
    c["id"] = e.id;
    c["status"] = status_name(e.status);
    if (!e.witness.empty()) c["witness"] = e.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["counts"] = {{"total", entries.size()},
                 {"fail", fail_count()},
                 {"discrepancy", discrepancy_count()}};
  return j.dump(2);
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& e : entries) {
    os << "  [" << status_name(e.status) << "] " << e.id;
    if (!e.witness.empty()) os << "  -- " << e.witness;
    if (e.elapsed_ms > 0) os << "  (" << e.elapsed_ms << " ms)";
    os << "\n";
  }
  os << entries.size() << " checks, " << fail_count() << " failed, " << discrepancy_count()
     << " discrepancies\n";
  return os.str();
}

}  // namespace crlie

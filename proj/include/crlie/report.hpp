#pragma once

#include <string>
#include <vector>

namespace crlie {

enum class CheckStatus { pass, fail, discrepancy };

struct CheckEntry {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // human-readable detail; empty when not needed
  double elapsed_ms = 0.0;
};

/// Suite result. Failures drive the exit code; discrepancy rows mark places
/// where the computation disagrees with a prose claim and are surfaced but
/// do not fail the run.
struct CheckReport {
  std::string suite;
  std::vector<CheckEntry> entries;

  void add(std::string id, bool ok, std::string witness = "");
  void add_status(std::string id, CheckStatus st, std::string witness = "");
  void merge(const CheckReport& other);

  int fail_count() const;
  int discrepancy_count() const;
  bool all_passed() const { return fail_count() == 0; }
  int exit_code() const { return all_passed() ? 0 : 1; }

  /// Timing is omitted from JSON so output is byte-deterministic per seed.
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace crlie

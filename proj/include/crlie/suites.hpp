#pragma once

#include <cstdint>

#include "crlie/report.hpp"

namespace crlie {

struct SuiteOptions {
  uint64_t seed = 42;
  std::string catalog_dir;  // empty: use the default
};

/// The numbered verification criteria (1..14). Each returns a report with
/// one entry per sub-check.
CheckReport run_criterion(int number, const SuiteOptions& opts);
int criterion_count();
std::string criterion_title(int number);

/// Named groups: all, forms, su, flat, classify3, thm1, thm4, embed.
CheckReport run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<std::string> suite_names();

}  // namespace crlie

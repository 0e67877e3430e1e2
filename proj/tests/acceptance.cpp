// Acceptance suite: runs every numbered criterion end to end and prints one
// pass/fail line per criterion. Exit code 0 only when all criteria pass.

#include <cstring>
#include <iostream>

#include "crlie/suites.hpp"

int main(int argc, char** argv) {
  using namespace crlie;
  SuiteOptions opts;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--seed") == 0 && k + 1 < argc) opts.seed = std::stoull(argv[++k]);
  }
  int failed = 0;
  for (int n = 1; n <= criterion_count(); ++n) {
    CheckReport rep;
    try {
      rep = run_criterion(n, opts);
    } catch (const std::exception& e) {
      std::cout << "[FAIL] criterion " << n << ": " << criterion_title(n) << "  -- exception: "
                << e.what() << "\n";
      ++failed;
      continue;
    }
    bool ok = rep.all_passed();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << criterion_title(n);
    if (!ok) {
      for (const auto& e : rep.entries)
        if (e.status == CheckStatus::fail) {
          std::cout << "  -- first failure: " << e.id;
          if (!e.witness.empty()) std::cout << " (" << e.witness << ")";
          break;
        }
      ++failed;
    }
    std::cout << "\n";
  }
  if (failed == 0) {
    std::cout << "all " << criterion_count() << " criteria passed\n";
  } else {
    std::cout << failed << " of " << criterion_count() << " criteria failed\n";
  }
  return failed == 0 ? 0 : 1;
}

#pragma once

// Desk-scale invariant suites run by `verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corrwork {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// passivity, protocols, entanglement, bounds.
std::vector<std::string> verify_suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an unknown name.
VerifyReport run_verify(std::string_view suite, std::uint64_t seed = kDefaultSeed);

/// One line per check plus a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace corrwork

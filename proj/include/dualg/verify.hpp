#pragma once

// Self-checks runnable from the CLI and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace dualg {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int jobs = 1;
};

/// combinatorics, bijection, symfunc, measures, sampling, simd, asymptotics.
std::vector<std::string> invariant_suites();

/// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_invariant_suite(const std::string& suite, const VerifyOptions& opt = {});

inline constexpr int kAcceptanceCriteria = 13;

std::string acceptance_title(int criterion);

/// Runs criterion 1..13. Exceptions are caught and reported as failures.
CheckResult run_acceptance(int criterion, const VerifyOptions& opt = {});

/// "PASS  <id>  <title>  [<detail>; <seconds> s]"
std::string format_result(const CheckResult& r);

}  // namespace dualg
